#pragma once

#include <stdexcept>
#include <vector>

#include "quintrank/cosets.hpp"
#include "quintrank/representation.hpp"

namespace quintrank {

class DimensionOverflow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr Eigen::Index kMaxTensorDimension = 64;

/// Kronecker product with the first factor most significant.
RepMatrix kron(const RepMatrix& a, const RepMatrix& b);

/// The operator v_1 (x) ... (x) v_n -> v_{1 sigma} (x) ... (x) v_{n sigma} on
/// (C^d)^{(x) n}, with sigma given as a right action (sigma.images()[i] == i sigma).
RepMatrix factor_permutation(const Permutation& sigma, Eigen::Index d);

/// Tensor induction of rho (a representation of induced_group(G, Q)) along the
/// coset system: g -> (rho(q_1(g)) (x) ... (x) rho(q_n(g))) psi(pi(g)).
/// Throws DimensionOverflow if dim(rho)^n exceeds kMaxTensorDimension.
Representation tensor_induction(const CosetSystem& cs, const Representation& rho);

/// Index-2 closed form with representatives {1, theta}:
///   g in Q:      rho(g) (x) rho(theta g theta^-1)
///   otherwise:  [rho(g theta^-1) (x) rho(theta g)] o swap
Representation tensor_induction_index2(const FiniteGroup& g, const Subgroup& q, Element theta,
                                       const Representation& rho);

/// g -> rho(theta g theta^-1) on Q (theta normalizes Q).
Representation conjugate_representation(const FiniteGroup& g, const Subgroup& q, Element theta,
                                        const Representation& rho);

/// Order of the image of Q in PGL(V) and the largest element order there.
struct ProjectiveImage {
  std::size_t order = 0;
  std::size_t max_element_order = 0;
  /// "A4", "S4", "A5", or "other".
  std::string name;
};
ProjectiveImage projective_image(const Representation& rho);

struct TensorCriterion {
  /// Some linear character lambda of Q has conj(chi_V) lambda == chi_{V^theta}.
  bool criterion_holds = false;
  /// Index into linear_characters(Q) of the first such lambda, or -1.
  long lambda_index = -1;
  /// <chi, chi> of the tensor induction is at least 2.
  bool reducible = false;
  DecompositionProfile profile;
  ProjectiveImage image;

  bool consistent() const { return criterion_holds == reducible; }
};

/// Both sides of the index-2 reducibility criterion for a 2-dimensional
/// irreducible rho of Q. Throws PreconditionViolated unless rho is
/// irreducible of dimension 2 with projective image A4, S4 or A5.
TensorCriterion tensor_criterion(const CosetSystem& cs, Element theta, const Representation& rho);

}  // namespace quintrank
