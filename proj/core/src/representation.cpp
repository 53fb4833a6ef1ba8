#include "quintrank/representation.hpp"

#include <cmath>
#include <numbers>

namespace quintrank {

Character::Character(FiniteGroup g, std::vector<Complex> values) : group_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != group_.order()) throw std::invalid_argument("Character: value count mismatch");
}

Character Character::operator+(const Character& other) const {
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_.at(i);
  return Character(group_, std::move(v));
}

Character Character::operator*(const Character& other) const {
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= other.values_.at(i);
  return Character(group_, std::move(v));
}

Character Character::scaled(double s) const {
  auto v = values_;
  for (auto& x : v) x *= s;
  return Character(group_, std::move(v));
}

Character Character::conjugate() const {
  auto v = values_;
  for (auto& x : v) x = std::conj(x);
  return Character(group_, std::move(v));
}

Character Character::trivial(const FiniteGroup& g) { return Character(g, std::vector<Complex>(g.order(), 1.0)); }

Representation::Representation(FiniteGroup g, std::vector<RepMatrix> images)
    : group_(std::move(g)), images_(std::move(images)) {
  if (images_.size() != group_.order()) throw std::invalid_argument("Representation: image count mismatch");
  const auto d = images_.front().rows();
  for (const auto& m : images_)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("Representation: images must be square of equal size");
}

Character Representation::character() const {
  std::vector<Complex> v(images_.size());
  for (std::size_t g = 0; g < v.size(); ++g) v[g] = images_[g].trace();
  return Character(group_, std::move(v));
}

double Representation::homomorphism_defect() const {
  double worst = 0.0;
  for (Element g = 0; g < group_.order(); ++g)
    for (Element h = 0; h < group_.order(); ++h) {
      const RepMatrix diff = images_[g] * images_[h] - images_[group_.mul(g, h)];
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  return worst;
}

Representation Representation::pullback(const FiniteGroup& source, const std::vector<Element>& phi) const {
  std::vector<RepMatrix> out;
  out.reserve(source.order());
  for (Element x = 0; x < source.order(); ++x) out.push_back(images_.at(phi.at(x)));
  return Representation(source, std::move(out));
}

Representation Representation::restrict_to(const Subgroup& h) const {
  std::vector<RepMatrix> out;
  for (Element x : h.elements()) out.push_back(images_[x]);
  return Representation(induced_group(group_, h), std::move(out));
}

Representation Representation::twisted_by(const Character& linear) const {
  auto out = images_;
  for (std::size_t g = 0; g < out.size(); ++g) out[g] *= linear(static_cast<Element>(g));
  return Representation(group_, std::move(out));
}

Character Representation::determinant() const {
  std::vector<Complex> v(images_.size());
  for (std::size_t g = 0; g < v.size(); ++g) v[g] = images_[g].determinant();
  return Character(group_, std::move(v));
}

Complex inner_product(const Character& chi1, const Character& chi2) {
  if (chi1.group().order() != chi2.group().order())
    throw std::invalid_argument("inner_product: characters live on different groups");
  Complex sum = 0.0;
  for (Element g = 0; g < chi1.group().order(); ++g) sum += chi1(g) * std::conj(chi2(g));
  return sum / static_cast<double>(chi1.group().order());
}

std::optional<long> round_to_integer(Complex z, double tol) {
  const double re = std::round(z.real());
  if (std::abs(z.real() - re) > tol || std::abs(z.imag()) > tol) return std::nullopt;
  return static_cast<long>(re);
}

std::vector<Character> linear_characters(const FiniteGroup& g) {
  const AbelianQuotient ab = abelianization(g);
  const auto& factors = ab.factors();
  std::vector<Character> out;
  std::vector<std::uint64_t> exps(factors.size(), 0);
  for (std::size_t idx = 0; idx < ab.order(); ++idx) {
    std::vector<Complex> values(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      double phase = 0.0;
      const auto& c = ab.coordinates(x);
      for (std::size_t t = 0; t < factors.size(); ++t)
        phase += static_cast<double>((exps[t] * c[t]) % factors[t]) / static_cast<double>(factors[t]);
      values[x] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    out.emplace_back(g, std::move(values));
    for (std::size_t t = factors.size(); t-- > 0;) {
      if (++exps[t] < factors[t]) break;
      exps[t] = 0;
    }
  }
  return out;
}

long DecompositionProfile::linear_constituents() const {
  long total = 0;
  for (long m : linear_multiplicities) total += m;
  return total;
}

std::string to_string(DecompositionType t) {
  switch (t) {
    case DecompositionType::Irreducible: return "irreducible";
    case DecompositionType::ThreePlusOne: return "(3,1)";
    case DecompositionType::Other: return "other";
  }
  return "other";
}

DecompositionProfile decomposition_profile(const FiniteGroup& g, const Character& chi) {
  DecompositionProfile p;
  const auto norm = round_to_integer(inner_product(chi, chi));
  if (!norm) throw NonIntegral("decomposition_profile: <chi, chi> is not an integer");
  p.selfnorm = *norm;
  for (const auto& lambda : linear_characters(g)) {
    const auto m = round_to_integer(inner_product(chi, lambda));
    if (!m || *m < 0) throw NonIntegral("decomposition_profile: linear multiplicity is not a nonnegative integer");
    p.linear_multiplicities.push_back(*m);
  }
  const auto degree = round_to_integer(chi(0));
  if (p.selfnorm == 1)
    p.type = DecompositionType::Irreducible;
  else if (p.selfnorm == 2 && degree && *degree == 4 && p.linear_constituents() == 1)
    p.type = DecompositionType::ThreePlusOne;
  return p;
}

}  // namespace quintrank
