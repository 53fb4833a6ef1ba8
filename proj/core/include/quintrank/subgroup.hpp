#pragma once

#include <optional>
#include <vector>

#include "quintrank/finite_group.hpp"
#include "quintrank/permutation.hpp"

namespace quintrank {

/// A subset of a group's labels closed under multiplication, kept sorted
/// (so the identity comes first).
class Subgroup {
public:
  Subgroup() = default;
  /// Adopts `members` as a subgroup of `g`; throws std::invalid_argument if
  /// the set is not closed or lacks the identity.
  Subgroup(const FiniteGroup& g, std::vector<Element> members);

  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& elements() const { return members_; }
  bool contains(Element x) const { return x < index_.size() && index_[x] >= 0; }
  /// Position of x in elements(), which is also its label in induced_group().
  std::size_t index_of(Element x) const { return static_cast<std::size_t>(index_.at(x)); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  std::vector<Element> members_;
  std::vector<long> index_;
};

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// The subgroup as a group in its own right; label k is h.elements()[k].
FiniteGroup induced_group(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;  // parent label -> quotient label
};

/// G/N for normal N. Cosets are labelled in order of their smallest member.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// G1 x G2 with label a * |G2| + b for (a, b).
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

/// Pullback of a subgroup of `target` along a homomorphism `projection`.
Subgroup preimage(const FiniteGroup& g, const std::vector<Element>& projection, const Subgroup& target);

/// Permutation groups generated by the given permutations.
Closure<Permutation> permutation_group(const std::vector<Permutation>& gens);
/// S_n generated by (0 1) and (0 1 ... n-1).
Closure<Permutation> symmetric_group(int n);
/// The even permutations of a closure, as a subgroup.
Subgroup even_subgroup(const Closure<Permutation>& sym);
FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n as symmetries of an n-gon.
Closure<Permutation> dihedral_group(int n);

/// Label of a permutation in a closure, if present.
std::optional<Element> find_label(const Closure<Permutation>& c, const Permutation& p);

}  // namespace quintrank
