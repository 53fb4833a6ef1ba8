#include "quintrank/tensor_induction.hpp"

#include <algorithm>

namespace quintrank {

RepMatrix kron(const RepMatrix& a, const RepMatrix& b) {
  RepMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RepMatrix factor_permutation(const Permutation& sigma, Eigen::Index d) {
  const int n = sigma.degree();
  Eigen::Index total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  RepMatrix p = RepMatrix::Zero(total, total);
  std::vector<Eigen::Index> digits(static_cast<std::size_t>(n));
  for (Eigen::Index col = 0; col < total; ++col) {
    Eigen::Index rest = col;
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = rest % d;
      rest /= d;
    }
    Eigen::Index row = 0;
    for (int i = 0; i < n; ++i) row = row * d + digits[static_cast<std::size_t>(sigma(i))];
    p(row, col) = 1.0;
  }
  return p;
}

Representation tensor_induction(const CosetSystem& cs, const Representation& rho) {
  const Subgroup& q = cs.subgroup();
  if (rho.group().order() != q.order())
    throw std::invalid_argument("tensor_induction: rho is not a representation of the subgroup");
  const std::size_t n = cs.index();
  Eigen::Index total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= rho.dim();
    if (total > kMaxTensorDimension)
      throw DimensionOverflow("tensor_induction: dim^index exceeds " + std::to_string(kMaxTensorDimension));
  }
  const FiniteGroup& g = cs.group();
  std::vector<RepMatrix> images;
  images.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const CosetFactor f = coset_factorization(cs, x);
    RepMatrix a = rho(static_cast<Element>(q.index_of(f.q[0])));
    for (std::size_t i = 1; i < n; ++i) a = kron(a, rho(static_cast<Element>(q.index_of(f.q[i]))));
    images.push_back(a * factor_permutation(f.pi, rho.dim()));
  }
  return Representation(g, std::move(images));
}

Representation tensor_induction_index2(const FiniteGroup& g, const Subgroup& q, Element theta,
                                       const Representation& rho) {
  if (2 * q.order() != g.order() || q.contains(theta))
    throw std::invalid_argument("tensor_induction_index2: need index 2 and theta outside Q");
  const Element theta_inv = g.inv(theta);
  auto r = [&](Element x) -> const RepMatrix& { return rho(static_cast<Element>(q.index_of(x))); };
  const RepMatrix swap = factor_permutation(Permutation::transposition(2, 0, 1), rho.dim());
  std::vector<RepMatrix> images;
  images.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (q.contains(x))
      images.push_back(kron(r(x), r(g.conj(theta, x))));
    else
      images.push_back(kron(r(g.mul(x, theta_inv)), r(g.mul(theta, x))) * swap);
  }
  return Representation(g, std::move(images));
}

Representation conjugate_representation(const FiniteGroup& g, const Subgroup& q, Element theta,
                                        const Representation& rho) {
  std::vector<RepMatrix> images;
  images.reserve(q.order());
  for (Element x : q.elements()) images.push_back(rho(static_cast<Element>(q.index_of(g.conj(theta, x)))));
  return Representation(rho.group(), std::move(images));
}

namespace {

bool is_scalar(const RepMatrix& m) {
  const RepMatrix diff = m - m(0, 0) * RepMatrix::Identity(m.rows(), m.cols());
  return diff.cwiseAbs().maxCoeff() <= kMatrixTolerance;
}

}  // namespace

ProjectiveImage projective_image(const Representation& rho) {
  const FiniteGroup& g = rho.group();
  std::size_t kernel = 0;
  ProjectiveImage out;
  for (Element x = 0; x < g.order(); ++x) {
    if (is_scalar(rho(x))) ++kernel;
    // Projective order of x: least k with rho(x)^k scalar.
    std::size_t k = 1;
    for (Element y = x; !is_scalar(rho(y)); y = g.mul(y, x)) ++k;
    out.max_element_order = std::max(out.max_element_order, k);
  }
  out.order = g.order() / kernel;
  if (out.order == 12 && out.max_element_order == 3)
    out.name = "A4";
  else if (out.order == 24 && out.max_element_order == 4)
    out.name = "S4";
  else if (out.order == 60 && out.max_element_order == 5)
    out.name = "A5";
  else
    out.name = "other";
  return out;
}

TensorCriterion tensor_criterion(const CosetSystem& cs, Element theta, const Representation& rho) {
  const FiniteGroup& g = cs.group();
  const Subgroup& q = cs.subgroup();
  if (cs.index() != 2 || q.contains(theta)) throw PreconditionViolated("tensor_criterion: need index 2 and theta outside Q");
  if (rho.dim() != 2) throw PreconditionViolated("tensor_criterion: rho must be 2-dimensional");
  const Character chi = rho.character();
  const auto norm = round_to_integer(inner_product(chi, chi));
  if (!norm || *norm != 1) throw PreconditionViolated("tensor_criterion: rho is not irreducible");
  TensorCriterion out;
  out.image = projective_image(rho);
  if (out.image.name == "other")
    throw PreconditionViolated("tensor_criterion: projective image of order " + std::to_string(out.image.order) +
                               " is not A4, S4 or A5");

  const Character chi_theta = conjugate_representation(g, q, theta, rho).character();
  const Character dual = chi.conjugate();
  const auto lambdas = linear_characters(rho.group());
  for (std::size_t k = 0; k < lambdas.size() && !out.criterion_holds; ++k) {
    bool match = true;
    for (Element x = 0; x < rho.group().order() && match; ++x)
      match = std::abs(dual(x) * lambdas[k](x) - chi_theta(x)) <= kCharacterTolerance;
    if (match) {
      out.criterion_holds = true;
      out.lambda_index = static_cast<long>(k);
    }
  }

  const Character induced = tensor_induction(cs, rho).character();
  out.profile = decomposition_profile(g, induced);
  out.reducible = out.profile.selfnorm >= 2;
  return out;
}

}  // namespace quintrank
