#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/clifford.hpp"
#include "quintrank/finite_group.hpp"
#include "quintrank/permutation.hpp"
#include "quintrank/subgroup.hpp"

namespace quintrank {

/// Z/2^r as a G-module, with G acting through a sign character
/// (-1 acts as negation) or trivially.
class CoefficientModule {
public:
  static CoefficientModule trivial(const FiniteGroup& g, unsigned r);
  /// `sign[g]` in {+1, -1}; must be a homomorphism.
  static CoefficientModule twisted(const FiniteGroup& g, unsigned r, std::vector<int> sign);

  unsigned r() const { return r_; }
  std::uint32_t modulus() const { return 1u << r_; }
  int action(Element g) const { return sign_[g]; }
  /// a_g * c in Z/2^r.
  std::uint32_t act(Element g, std::uint32_t c) const {
    return sign_[g] > 0 ? c : (modulus() - c) & (modulus() - 1);
  }
  /// True when every element acts as the identity (always so for r = 1).
  bool acts_trivially() const;
  CoefficientModule restrict_to(const Subgroup& h) const;

private:
  unsigned r_ = 1;
  std::vector<int> sign_;
};

using Cochain1 = std::vector<std::uint32_t>;

/// Normalized 2-cochain with values in a CoefficientModule, stored as an
/// order x order table in additive notation.
class Cocycle2 {
public:
  static Cocycle2 zero(FiniteGroup g, CoefficientModule m);
  /// Reduces entries mod 2^r and applies the canonical normalizing shift
  /// (subtracting the coboundary of the constant cochain omega(1, 1)).
  /// The table is not checked for the cocycle identity; see verify_cocycle.
  static Cocycle2 from_table(FiniteGroup g, CoefficientModule m, std::vector<std::uint32_t> values);

  const FiniteGroup& group() const { return group_; }
  const CoefficientModule& module() const { return module_; }
  std::uint32_t operator()(Element g, Element h) const { return values_[g * group_.order() + h]; }
  const std::vector<std::uint32_t>& values() const { return values_; }

  /// Restriction to a subgroup, relabelled as induced_group(group(), h).
  Cocycle2 restrict_to(const Subgroup& h) const;
  /// omega + delta(c)
  Cocycle2 plus_coboundary(const Cochain1& c) const;

  /// Text form: "order r" then order^2 integers, one table row per line.
  std::string serialize() const;
  static Cocycle2 deserialize(FiniteGroup g, CoefficientModule m, std::istream& in);

  friend bool operator==(const Cocycle2& a, const Cocycle2& b) {
    return a.values_ == b.values_ && a.module_.r() == b.module_.r();
  }

private:
  Cocycle2(FiniteGroup g, CoefficientModule m, std::vector<std::uint32_t> v)
      : group_(std::move(g)), module_(std::move(m)), values_(std::move(v)) {}

  FiniteGroup group_;
  CoefficientModule module_;
  std::vector<std::uint32_t> values_;
};

/// delta(c)(g, h) = a_g c(h) - c(gh) + c(g)
Cocycle2 coboundary(const FiniteGroup& g, const CoefficientModule& m, const Cochain1& c);

/// Twisted cocycle identity on all |G|^3 triples plus normalization.
bool verify_cocycle(const Cocycle2& omega);

/// A normalized 1-cochain c with delta(c) == omega, or nullopt when the class
/// of omega is nonzero.
std::optional<Cochain1> coboundary_witness(const Cocycle2& omega);

/// S_n with the sign cocycle of its Pin lift: the transposition (i j) lifts to
/// (e_i - e_j)/sqrt(2) in the Clifford algebra with e_i^2 = +1, every
/// permutation to the product along its selection-sort factorization, and
/// lift(s) lift(t) = (-1)^omega(s, t) lift(st).
struct PinCover {
  Closure<Permutation> sn;
  std::vector<CliffordElement> lifts;  // lifts[label]
  Cocycle2 omega;
};
PinCover pin_cocycle_sn(int n);

/// E = Z/2^r x G with (c1, g1)(c2, g2) = (c1 + a_{g1} c2 + omega(g1, g2), g1 g2).
/// Label of (c, g) is g * 2^r + c.
struct CentralExtension {
  FiniteGroup group;
  std::vector<Element> projection;  // E label -> G label
  Subgroup kernel;                  // the (c, 1)
  std::uint32_t modulus = 2;

  Element lift(std::uint32_t c, Element g) const { return static_cast<Element>(g * modulus + c); }
};
CentralExtension central_extension(const Cocycle2& omega);

class TooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CohomologyLimits {
  std::size_t max_group_order_h2 = 30;
  std::size_t max_group_order_h1 = 240;
  std::size_t memory_budget_bytes = std::size_t{256} << 20;
};

/// Composition length of H^1(G, M), i.e. log2 |H^1|. For r = 1 this is the
/// dimension over the two-element field.
int h1_dimension(const FiniteGroup& g, const CoefficientModule& m, const CohomologyLimits& limits = {});
/// Composition length of H^2(G, M) = log2 |H^2|; the dimension when r = 1.
int h2_dimension(const FiniteGroup& g, const CoefficientModule& m, const CohomologyLimits& limits = {});

}  // namespace quintrank
