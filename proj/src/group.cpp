#include "wordlab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wordlab/errors.hpp"

namespace wordlab {

FiniteGroup FiniteGroup::from_generators(std::vector<Permutation> gens,
                                         std::string name,
                                         std::size_t order_cap) {
  if (gens.empty()) throw ValidationError("at least one generator required");
  const int degree = gens[0].degree();
  for (const auto& g : gens) {
    g.validate();
    if (g.degree() != degree)
      throw ValidationError("generators must share one degree");
  }

  // BFS closure from the identity; remember how each element was reached so
  // the multiplication table can be filled by index arithmetic alone.
  struct Link {
    int parent;  // discovery index of the left factor
    int gen;     // generator index of the right factor
  };
  std::vector<Permutation> discovered{Permutation::identity(degree)};
  std::vector<Link> links{{-1, -1}};
  std::map<Permutation, int> seen{{discovered[0], 0}};
  for (std::size_t head = 0; head < discovered.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation prod = compose(discovered[head], gens[gi]);
      if (seen.contains(prod)) continue;
      if (discovered.size() >= order_cap)
        throw SizeLimitError("group closure exceeds order cap " +
                             std::to_string(order_cap));
      seen.emplace(prod, static_cast<int>(discovered.size()));
      discovered.push_back(std::move(prod));
      links.push_back({static_cast<int>(head), static_cast<int>(gi)});
    }
  }

  const int n = static_cast<int>(discovered.size());
  FiniteGroup G;
  G.order_ = n;
  G.degree_ = degree;
  G.name_ = std::move(name);
  G.elements_ = discovered;
  std::sort(G.elements_.begin(), G.elements_.end());
  // The identity is lexicographically minimal among bijections, so index 0.

  std::map<Permutation, int> canonical;
  for (int i = 0; i < n; ++i) canonical.emplace(G.elements_[i], i);
  std::vector<int> canon_of(n);  // discovery index -> canonical index
  for (int i = 0; i < n; ++i) canon_of[i] = canonical.at(discovered[i]);

  G.mul_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<char> column_done(n, 0);
  auto fill_column_direct = [&](const Permutation& right, int col) {
    for (int x = 0; x < n; ++x)
      G.mul_[static_cast<std::size_t>(x) * n + col] =
          canonical.at(compose(G.elements_[x], right));
    column_done[col] = 1;
  };
  // identity column
  for (int x = 0; x < n; ++x) G.mul_[static_cast<std::size_t>(x) * n + 0] = x;
  column_done[0] = 1;
  // generator columns by direct composition
  std::vector<int> gen_col(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    gen_col[gi] = canonical.at(gens[gi]);
    if (!column_done[gen_col[gi]]) fill_column_direct(gens[gi], gen_col[gi]);
  }
  // remaining columns in discovery order: y = parent * gen, so
  // x*y = (x*parent)*gen and both lookups are already available.
  for (int d = 1; d < n; ++d) {
    int col = canon_of[d];
    if (column_done[col]) continue;
    int pcol = canon_of[links[d].parent];
    int gcol = gen_col[links[d].gen];
    for (int x = 0; x < n; ++x) {
      int xp = G.mul_[static_cast<std::size_t>(x) * n + pcol];
      G.mul_[static_cast<std::size_t>(x) * n + col] =
          G.mul_[static_cast<std::size_t>(xp) * n + gcol];
    }
    column_done[col] = 1;
  }

  G.inv_.resize(n);
  for (int i = 0; i < n; ++i) G.inv_[i] = canonical.at(G.elements_[i].inverse());

  G.generators_.reserve(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    G.generators_.push_back(gen_col[gi]);

  G.orders_.resize(n);
  long long exp = 1;
  for (int i = 0; i < n; ++i) {
    int ord = 1;
    for (int x = i; x != identity(); x = G.mul(x, i)) ++ord;
    G.orders_[i] = ord;
    exp = std::lcm(exp, static_cast<long long>(ord));
  }
  G.exponent_ = exp;
  return G;
}

int FiniteGroup::power(int g, long long e) const {
  const int ord = element_order(g);
  long long r = e % ord;
  if (r < 0) r += ord;
  int base = g, acc = identity();
  while (r) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}


bool FiniteGroup::is_abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> work{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = 1;
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  // In a finite group the closure under products alone already contains
  // inverses, since each element has finite order.
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (int s : seeds) {
      int p = G.mul(work[head], s);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return Subgroup{&G, std::move(work)};
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems) {
  if (elems.empty()) throw ValidationError("centralizer of empty set");
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int s : elems)
      if (G.mul(x, s) != G.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup{&G, std::move(members)};
}

Subgroup derived_of(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> seen(G.order(), 0);
  std::vector<int> comms;
  for (int a : H.members)
    for (int b : H.members) {
      int c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(G, comms);
}

}  // namespace wordlab
