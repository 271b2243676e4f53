#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/errors.hpp"
#include "wordlab/group.hpp"
#include "wordlab/numtheory.hpp"

namespace wordlab {

namespace {

bool parse_index(const std::string& s, std::size_t from, long& out) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  if (s.size() - from > 6) return false;
  out = std::stol(s.substr(from));
  return out >= 1;
}

std::vector<Permutation> cyclic_gens(long n) {
  if (n == 1) return {Permutation::identity(1)};
  std::vector<int> rot(n);
  for (long i = 0; i < n; ++i) rot[i] = static_cast<int>((i + 1) % n);
  return {Permutation(std::move(rot))};
}

std::vector<Permutation> dihedral_gens(long n) {
  // order 2n; n <= 2 needs a larger degree to stay faithful
  if (n == 1) return {Permutation({1, 0})};
  if (n == 2) return {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})};
  std::vector<int> rot(n), flip(n);
  for (long i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    flip[i] = static_cast<int>((n - i) % n);
  }
  return {Permutation(std::move(rot)), Permutation(std::move(flip))};
}

std::vector<Permutation> symmetric_gens(long n) {
  if (n <= 1) return {Permutation::identity(1)};
  std::vector<int> cyc(n), swap01(n);
  for (long i = 0; i < n; ++i) {
    cyc[i] = static_cast<int>((i + 1) % n);
    swap01[i] = static_cast<int>(i);
  }
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return {Permutation(std::move(swap01))};
  return {Permutation(std::move(swap01)), Permutation(std::move(cyc))};
}

std::vector<Permutation> alternating_gens(long n) {
  if (n <= 2) return {Permutation::identity(std::max(n, 1L))};
  std::vector<int> three(n);
  for (long i = 0; i < n; ++i) three[i] = static_cast<int>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return {Permutation(std::move(three))};
  std::vector<int> cyc(n);
  if (n % 2 == 1) {
    for (long i = 0; i < n; ++i) cyc[i] = static_cast<int>((i + 1) % n);
  } else {
    cyc[0] = 0;
    for (long i = 1; i < n; ++i) cyc[i] = static_cast<int>(i % (n - 1) + 1);
  }
  return {Permutation(std::move(three)), Permutation(std::move(cyc))};
}

// Left regular representation on {1,-1,i,-i,j,-j,k,-k}.
std::vector<Permutation> quaternion_gens() {
  return {Permutation({2, 3, 1, 0, 6, 7, 5, 4}),
          Permutation({4, 5, 7, 6, 1, 0, 2, 3})};
}

// Action on the 8 nonzero vectors of F_3^2, enumerated lexicographically.
std::vector<Permutation> sl23_gens() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto apply = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> imgs(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      int a = (m00 * vecs[i].first + m01 * vecs[i].second) % 3;
      int b = (m10 * vecs[i].first + m11 * vecs[i].second) % 3;
      for (std::size_t j = 0; j < vecs.size(); ++j)
        if (vecs[j] == std::make_pair(a, b)) {
          imgs[i] = static_cast<int>(j);
          break;
        }
    }
    return Permutation(std::move(imgs));
  };
  // S = [[0,-1],[1,0]], T = [[1,1],[0,1]]
  return {apply(0, 2, 1, 0), apply(1, 1, 0, 1)};
}

// Moebius action on the projective line over F_p; point p plays infinity.
std::vector<Permutation> psl2_gens(long p) {
  std::vector<int> shift(p + 1), flip(p + 1);
  for (long z = 0; z < p; ++z) shift[z] = static_cast<int>((z + 1) % p);
  shift[p] = static_cast<int>(p);
  flip[0] = static_cast<int>(p);
  flip[p] = 0;
  for (long z = 1; z < p; ++z)
    flip[z] = static_cast<int>(
        (p - mod_inv(static_cast<std::uint64_t>(z), static_cast<std::uint64_t>(p))) % p);
  return {Permutation(std::move(shift)), Permutation(std::move(flip))};
}

}  // namespace

FiniteGroup catalog_group(const std::string& spec, std::size_t order_cap) {
  long n = 0;
  if (spec == "Q8")
    return FiniteGroup::from_generators(quaternion_gens(), spec, order_cap);
  if (spec == "SL(2,3)")
    return FiniteGroup::from_generators(sl23_gens(), spec, order_cap);
  if (spec.starts_with("PSL(2,") && spec.ends_with(")")) {
    std::string inner = spec.substr(6, spec.size() - 7);
    long p = 0;
    if (!parse_index(inner, 0, p))
      throw ParseError("cannot parse group spec '" + spec + "'");
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
      throw ParseError("PSL(2,p) requires an odd prime p >= 5, got '" +
                            inner + "'");
    return FiniteGroup::from_generators(psl2_gens(p), spec, order_cap);
  }
  if (spec.size() >= 2 && spec[0] == 'C' && parse_index(spec, 1, n))
    return FiniteGroup::from_generators(cyclic_gens(n), spec, order_cap);
  if (spec.size() >= 2 && spec[0] == 'D' && parse_index(spec, 1, n))
    return FiniteGroup::from_generators(dihedral_gens(n), spec, order_cap);
  if (spec.size() >= 2 && spec[0] == 'S' && parse_index(spec, 1, n))
    return FiniteGroup::from_generators(symmetric_gens(n), spec, order_cap);
  if (spec.size() >= 2 && spec[0] == 'A' && parse_index(spec, 1, n))
    return FiniteGroup::from_generators(alternating_gens(n), spec, order_cap);
  throw ParseError("cannot parse group spec '" + spec + "'");
}

const std::vector<std::string>& catalog_roster() {
  static const std::vector<std::string> roster{
      "C2",  "C3", "C4", "C5",      "C6", "S3",       "C8",
      "D4",  "Q8", "D5", "A4",      "C12", "D6",      "S4",
      "SL(2,3)", "A5", "PSL(2,5)", "PSL(2,7)"};
  return roster;
}

}  // namespace wordlab
