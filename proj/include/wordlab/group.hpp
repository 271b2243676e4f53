#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/permutation.hpp"

namespace wordlab {

/// A finite permutation group with full multiplication and inverse tables.
/// Elements are canonical indices into the lexicographically sorted element
/// list; the identity is always index 0. Immutable once built.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultOrderCap = 1000;

  /// Closure of the generators under multiplication. Throws ValidationError
  /// for bad generators and SizeLimitError if the closure passes order_cap.
  static FiniteGroup from_generators(std::vector<Permutation> gens,
                                     std::string name,
                                     std::size_t order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }

  static constexpr int identity() { return 0; }

  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inv(int a) const { return inv_[a]; }

  /// g^e for any integer e (negative exponents use the inverse).
  int power(int g, long long e) const;

  /// g^-1 * x * g
  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }

  /// a^-1 b^-1 a b
  int commutator(int a, int b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  int element_order(int g) const { return orders_[g]; }

  /// lcm of all element orders.
  long long exponent() const { return exponent_; }

  bool is_abelian() const;

  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  /// Indices of the generators the group was built from.
  const std::vector<int>& generators() const { return generators_; }

  /// Index of a permutation, or -1 if it is not an element.
  int index_of(const Permutation& p) const;

private:
  FiniteGroup() = default;

  int order_ = 0;
  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> inv_;
  std::vector<int> generators_;
  std::vector<int> orders_;
  long long exponent_ = 1;
};

/// A subgroup given by its sorted member indices in the parent group.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted, always contains 0

  std::size_t order() const { return members.size(); }
  bool contains(int g) const;
};

/// Smallest subgroup containing the seeds; empty seeds give the trivial one.
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds);

/// All x with x s = s x for every s in elems. elems must be nonempty.
Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems);

/// Subgroup generated by all commutators [a, b] with a, b in H.
Subgroup derived_of(const FiniteGroup& G, const Subgroup& H);

/// Build a named group from the catalog grammar: C<n>, D<n> (dihedral of
/// order 2n), S<n>, A<n>, Q8, SL(2,3), PSL(2,<p>) for odd primes p.
FiniteGroup catalog_group(const std::string& spec,
                          std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Fixed roster of catalog names used by the verification suites.
const std::vector<std::string>& catalog_roster();

}  // namespace wordlab
