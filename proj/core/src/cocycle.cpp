#include "quintrank/cocycle.hpp"

#include <istream>
#include <sstream>

namespace quintrank {

CoefficientModule CoefficientModule::trivial(const FiniteGroup& g, unsigned r) {
  return twisted(g, r, std::vector<int>(g.order(), 1));
}

CoefficientModule CoefficientModule::twisted(const FiniteGroup& g, unsigned r, std::vector<int> sign) {
  if (r == 0 || r > 30) throw std::invalid_argument("CoefficientModule: r must lie in [1, 30]");
  if (sign.size() != g.order()) throw std::invalid_argument("CoefficientModule: action size mismatch");
  for (int s : sign)
    if (s != 1 && s != -1) throw std::invalid_argument("CoefficientModule: action values must be +1 or -1");
  for (Element a = 0; a < g.order(); ++a)
    for (Element s : g.generators())
      if (sign[g.mul(a, s)] != sign[a] * sign[s])
        throw std::invalid_argument("CoefficientModule: action is not a homomorphism");
  CoefficientModule m;
  m.r_ = r;
  m.sign_ = std::move(sign);
  return m;
}

bool CoefficientModule::acts_trivially() const {
  if (r_ == 1) return true;
  for (int s : sign_)
    if (s != 1) return false;
  return true;
}

CoefficientModule CoefficientModule::restrict_to(const Subgroup& h) const {
  CoefficientModule m;
  m.r_ = r_;
  for (Element x : h.elements()) m.sign_.push_back(sign_.at(x));
  return m;
}

Cocycle2 Cocycle2::zero(FiniteGroup g, CoefficientModule m) {
  const std::size_t n = g.order();
  return Cocycle2(std::move(g), std::move(m), std::vector<std::uint32_t>(n * n, 0));
}

Cocycle2 Cocycle2::from_table(FiniteGroup g, CoefficientModule m, std::vector<std::uint32_t> values) {
  const std::size_t n = g.order();
  if (values.size() != n * n) throw std::invalid_argument("Cocycle2: table size is not order^2");
  const std::uint32_t mask = m.modulus() - 1;
  for (auto& v : values) v &= mask;
  const std::uint32_t c0 = values[0];
  if (c0 != 0)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) values[a * n + b] = (values[a * n + b] - m.act(a, c0)) & mask;
  return Cocycle2(std::move(g), std::move(m), std::move(values));
}

Cocycle2 Cocycle2::restrict_to(const Subgroup& h) const {
  FiniteGroup sub = induced_group(group_, h);
  const std::size_t k = h.order();
  std::vector<std::uint32_t> v(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) v[i * k + j] = (*this)(h.elements()[i], h.elements()[j]);
  return Cocycle2(std::move(sub), module_.restrict_to(h), std::move(v));
}

Cocycle2 Cocycle2::plus_coboundary(const Cochain1& c) const {
  const Cocycle2 d = coboundary(group_, module_, c);
  auto v = values_;
  const std::uint32_t mask = module_.modulus() - 1;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + d.values_[i]) & mask;
  return Cocycle2(group_, module_, std::move(v));
}

std::string Cocycle2::serialize() const {
  std::ostringstream os;
  const std::size_t n = group_.order();
  os << n << ' ' << module_.r() << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) os << ' ';
      os << values_[a * n + b];
    }
    os << '\n';
  }
  return os.str();
}

Cocycle2 Cocycle2::deserialize(FiniteGroup g, CoefficientModule m, std::istream& in) {
  std::size_t order = 0;
  unsigned r = 0;
  if (!(in >> order >> r)) throw std::runtime_error("cocycle table: missing header");
  if (order != g.order() || r != m.r()) throw std::runtime_error("cocycle table: header does not match group/module");
  std::vector<std::uint32_t> v(order * order);
  for (auto& x : v) {
    long long raw = 0;
    if (!(in >> raw)) throw std::runtime_error("cocycle table: truncated");
    if (raw < 0 || raw >= static_cast<long long>(m.modulus())) throw std::runtime_error("cocycle table: value out of range");
    x = static_cast<std::uint32_t>(raw);
  }
  return Cocycle2(std::move(g), std::move(m), std::move(v));
}

Cocycle2 coboundary(const FiniteGroup& g, const CoefficientModule& m, const Cochain1& c) {
  const std::size_t n = g.order();
  if (c.size() != n) throw std::invalid_argument("coboundary: cochain size mismatch");
  const std::uint32_t mask = m.modulus() - 1;
  std::vector<std::uint32_t> v(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) v[a * n + b] = (m.act(a, c[b] & mask) - c[g.mul(a, b)] + c[a]) & mask;
  return Cocycle2::from_table(g, m, std::move(v));
}

bool verify_cocycle(const Cocycle2& omega) {
  const FiniteGroup& g = omega.group();
  const CoefficientModule& m = omega.module();
  const std::size_t n = g.order();
  const std::uint32_t mask = m.modulus() - 1;
  for (Element a = 0; a < n; ++a)
    if (omega(0, a) != 0 || omega(a, 0) != 0) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      const std::uint32_t wab = omega(a, b);
      for (Element c = 0; c < n; ++c) {
        const std::uint32_t lhs = m.act(a, omega(b, c)) - omega(ab, c) + omega(a, g.mul(b, c)) - wab;
        if ((lhs & mask) != 0) return false;
      }
    }
  return true;
}

PinCover pin_cocycle_sn(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("pin_cocycle_sn: n must lie in [2, 6]");
  PinCover out{symmetric_group(n), {}, Cocycle2::zero(FiniteGroup(), CoefficientModule::trivial(FiniteGroup(), 1))};
  const FiniteGroup& g = out.sn.group;
  out.lifts.reserve(g.order());
  for (const auto& p : out.sn.elements) {
    auto lift = CliffordElement::scalar(1);
    for (auto [i, j] : p.transposition_factorization()) lift = lift * CliffordElement::transposition_lift(i, j);
    out.lifts.push_back(std::move(lift));
  }
  const std::size_t order = g.order();
  std::vector<std::uint32_t> table(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      const auto sign = (out.lifts[a] * out.lifts[b]).relative_sign(out.lifts[g.mul(a, b)]);
      if (!sign) throw std::logic_error("pin_cocycle_sn: lift product is not a signed lift");
      table[a * order + b] = *sign == 1 ? 0 : 1;
    }
  out.omega = Cocycle2::from_table(g, CoefficientModule::trivial(g, 1), std::move(table));
  return out;
}

CentralExtension central_extension(const Cocycle2& omega) {
  const FiniteGroup& g = omega.group();
  const CoefficientModule& m = omega.module();
  const std::size_t n = g.order();
  const std::uint32_t mod = m.modulus();
  const std::size_t order = n * mod;
  std::vector<Element> table(order * order);
  for (Element g1 = 0; g1 < n; ++g1)
    for (std::uint32_t c1 = 0; c1 < mod; ++c1)
      for (Element g2 = 0; g2 < n; ++g2) {
        const Element prod = g.mul(g1, g2);
        const std::uint32_t w = omega(g1, g2);
        for (std::uint32_t c2 = 0; c2 < mod; ++c2) {
          const std::uint32_t c = (c1 + m.act(g1, c2) + w) & (mod - 1);
          table[(g1 * mod + c1) * order + g2 * mod + c2] = static_cast<Element>(prod * mod + c);
        }
      }
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(static_cast<Element>(s * mod));
  if (mod > 1) gens.push_back(1);

  CentralExtension out;
  out.modulus = mod;
  out.group = FiniteGroup::from_table(order, std::move(table), std::move(gens));
  out.projection.resize(order);
  for (std::size_t x = 0; x < order; ++x) out.projection[x] = static_cast<Element>(x / mod);
  std::vector<Element> kernel(mod);
  for (std::uint32_t c = 0; c < mod; ++c) kernel[c] = c;
  out.kernel = Subgroup(out.group, std::move(kernel));
  return out;
}

}  // namespace quintrank
