#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quintrank/abelian.hpp"
#include "quintrank/finite_group.hpp"
#include "quintrank/subgroup.hpp"

namespace quintrank {

using Complex = std::complex<double>;
using RepMatrix = Eigen::MatrixXcd;

/// Entry comparisons on representation matrices.
inline constexpr double kMatrixTolerance = 1e-8;
/// Rounding tolerance for integer-valued character arithmetic.
inline constexpr double kCharacterTolerance = 1e-6;

class Character {
public:
  Character(FiniteGroup g, std::vector<Complex> values);

  const FiniteGroup& group() const { return group_; }
  Complex operator()(Element g) const { return values_[g]; }
  const std::vector<Complex>& values() const { return values_; }

  Character operator+(const Character& other) const;
  Character operator*(const Character& other) const;
  Character scaled(double s) const;
  Character conjugate() const;

  static Character trivial(const FiniteGroup& g);

private:
  FiniteGroup group_;
  std::vector<Complex> values_;
};

/// A homomorphism G -> GL(V), one matrix per element label.
class Representation {
public:
  Representation(FiniteGroup g, std::vector<RepMatrix> images);

  const FiniteGroup& group() const { return group_; }
  Eigen::Index dim() const { return images_.front().rows(); }
  const RepMatrix& operator()(Element g) const { return images_[g]; }
  const std::vector<RepMatrix>& images() const { return images_; }

  Character character() const;
  /// Largest entrywise deviation of rho(g) rho(h) from rho(gh) over all pairs.
  double homomorphism_defect() const;
  bool is_homomorphism(double tol = kMatrixTolerance) const { return homomorphism_defect() <= tol; }

  /// rho o phi for a map phi from another group into group().
  Representation pullback(const FiniteGroup& source, const std::vector<Element>& phi) const;
  /// rho restricted to a subgroup, labelled as induced_group(group(), h).
  Representation restrict_to(const Subgroup& h) const;
  /// rho tensored with a one-dimensional character.
  Representation twisted_by(const Character& linear) const;
  /// g -> det rho(g), a linear character.
  Character determinant() const;

private:
  FiniteGroup group_;
  std::vector<RepMatrix> images_;
};

/// (1/|G|) sum_g chi1(g) conj(chi2(g))
Complex inner_product(const Character& chi1, const Character& chi2);

/// Rounds a complex number to an integer; nullopt if it is farther than `tol`.
std::optional<long> round_to_integer(Complex z, double tol = kCharacterTolerance);

/// All one-dimensional characters of G, read off its abelianization.
std::vector<Character> linear_characters(const FiniteGroup& g);

class NonIntegral : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class DecompositionType { Irreducible, ThreePlusOne, Other };

struct DecompositionProfile {
  long selfnorm = 0;
  std::vector<long> linear_multiplicities;  // one per linear character of G
  DecompositionType type = DecompositionType::Other;

  long linear_constituents() const;
};

std::string to_string(DecompositionType t);

/// <chi, chi> and the multiplicities of each linear character; the type is
/// Irreducible for selfnorm 1 and ThreePlusOne for a degree-4 character with
/// selfnorm 2 and exactly one linear constituent.
DecompositionProfile decomposition_profile(const FiniteGroup& g, const Character& chi);

}  // namespace quintrank
