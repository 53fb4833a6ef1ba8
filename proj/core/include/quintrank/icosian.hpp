#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "quintrank/finite_group.hpp"
#include "quintrank/representation.hpp"

namespace quintrank {

/// Real quaternion a + b i + c j + d k.
struct Quaternion {
  std::array<double, 4> q{1.0, 0.0, 0.0, 0.0};

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  double distance(const Quaternion& other) const;
  /// The SU(2) matrix [[a + bi, c + di], [-c + di, a - bi]].
  RepMatrix to_matrix() const;
};

class ClosureFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite group of unit quaternions with its tautological 2-dimensional
/// representation.
struct QuaternionGroup {
  FiniteGroup group;
  std::vector<Quaternion> elements;  // elements[label]; label 0 is 1
  Representation rep;
};

/// The 120 unit icosians: the 24 Hurwitz units together with the even
/// coordinate permutations of (0, +-1, +-1/phi, +-phi)/2. The multiplication
/// table is built by matching each product to its nearest candidate after a
/// separation check; throws ClosureFailure if any product misses.
QuaternionGroup icosian_group();

/// The 24 Hurwitz units +-1, +-i, +-j, +-k, (+-1 +-i +-j +-k)/2 (the binary
/// tetrahedral group).
QuaternionGroup hurwitz_group();

/// The 48 units of the binary octahedral group: the Hurwitz units together
/// with the 24 quaternions (+-1 +-1)/sqrt(2) supported on two coordinates.
QuaternionGroup binary_octahedral_group();

/// Minimum pairwise distance of a candidate set, used as the separation check.
double min_separation(const std::vector<Quaternion>& set);

}  // namespace quintrank
