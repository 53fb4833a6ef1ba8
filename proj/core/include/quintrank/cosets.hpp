#pragma once

#include <vector>

#include "quintrank/abelian.hpp"
#include "quintrank/finite_group.hpp"
#include "quintrank/permutation.hpp"
#include "quintrank/subgroup.hpp"

namespace quintrank {

/// Right cosets Q g_1, ..., Q g_n of a subgroup Q of G with chosen representatives.
class CosetSystem {
public:
  /// Deterministic representatives: the identity for Q itself, the smallest
  /// label in every other coset; cosets ordered by their representative.
  CosetSystem(FiniteGroup g, Subgroup q);
  /// Caller-chosen transversal, one element per right coset in any order.
  CosetSystem(FiniteGroup g, Subgroup q, std::vector<Element> reps);

  const FiniteGroup& group() const { return group_; }
  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t index() const { return reps_.size(); }
  const std::vector<Element>& representatives() const { return reps_; }
  Element rep(std::size_t i) const { return reps_[i]; }
  /// i such that x lies in Q g_i.
  std::size_t coset_of(Element x) const { return coset_of_[x]; }

private:
  void index_cosets();

  FiniteGroup group_;
  Subgroup subgroup_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_of_;
};

/// g mapped into the wreath product Q wr S_n.
///
/// With right cosets and right multiplication, g_i * g = q_i(g) * g_{i pi(g)};
/// pi(g) is stored as a right action (pi.images()[i] == i pi(g)), so
/// pi(gh) == then(pi(g), pi(h)) and q_i(gh) == q_i(g) * q_{i pi(g)}(h).
struct CosetFactor {
  Permutation pi;
  std::vector<Element> q;  // labels in G, each inside Q
};

CosetFactor coset_factorization(const CosetSystem& cs, Element g);

/// The transfer G -> Q^ab, g -> image of prod_i q_i(g) in Q^ab.
class TransferMap {
public:
  TransferMap(const CosetSystem& cs);

  /// Q^ab coordinates of V(g).
  const std::vector<std::uint64_t>& value(Element g) const { return values_.at(g); }
  const AbelianQuotient& source_abelianization() const { return g_ab_; }
  const AbelianQuotient& target_abelianization() const { return q_ab_; }
  /// V as a map on G^ab: label in G^ab -> label in Q^ab. Throws if V is not
  /// constant on cosets of [G, G] (which would indicate a bug).
  std::vector<std::uint64_t> on_abelianization() const;
  bool is_homomorphism() const;
  bool is_trivial() const;

private:
  FiniteGroup group_;
  AbelianQuotient g_ab_;
  AbelianQuotient q_ab_;
  std::vector<std::vector<std::uint64_t>> values_;
};

}  // namespace quintrank
