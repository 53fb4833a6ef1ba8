#include "quintrank/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace quintrank {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

IntPolynomial IntPolynomial::from_descending(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return from_descending(v);
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<BigInt> IntPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  return divide_exact(*this, content());
}

IntPolynomial IntPolynomial::shifted(long k) const {
  // Horner in the ring: acc = acc * (x + k) + c_i.
  IntPolynomial acc;
  const IntPolynomial lin(std::vector<BigInt>{BigInt(k), BigInt(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + IntPolynomial(std::vector<BigInt>{*it});
  return acc;
}

IntPolynomial IntPolynomial::reversed() const { return IntPolynomial(std::vector<BigInt>(c_.rbegin(), c_.rend())); }

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) {
  std::vector<BigInt> out = a.c_;
  for (auto& c : out) c *= k;
  return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const BigInt& lb = b.lead();
  int e = a.degree() - db + 1;
  // Each step multiplies by lb and cancels the top term.
  for (int top = a.degree(); top >= db; --top) {
    const BigInt t = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= t * b.coeff(j);
    --e;
  }
  // Remaining factor keeps the result equal to lc(b)^(da - db + 1) a mod b.
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial& a, const BigInt& k) {
  std::vector<BigInt> out = a.coefficients();
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) throw std::domain_error("divide_exact: not divisible");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

namespace {

BigInt power(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

BigInt resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPolynomial a = a_in, b = b_in;
  BigInt s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 && b.degree() % 2) s = -1;
  }
  if (b.degree() == 0) return power(b.lead(), a.degree()) * s;

  const BigInt ca = a.content(), cb = b.content();
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const BigInt t = power(ca, b.degree()) * power(cb, a.degree());
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 && b.degree() % 2) s = -s;
    const IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    b = divide_exact(r, g * power(h, delta));
    g = a.lead();
    // h <- h^(1 - delta) g^delta
    h = delta == 0 ? h : exact_div(power(g, delta), power(h, delta - 1));
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  h = exact_div(power(b.lead(), da), power(h, da - 1));
  return s * t * h;
}

BigInt poly_discriminant(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 2) throw std::invalid_argument("poly_discriminant: degree must be at least 2");
  BigInt res = resultant(f, f.derivative());
  BigInt out = exact_div(res, f.lead());
  if ((d * (d - 1) / 2) % 2) out = -out;
  return out;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int real_root_count(const IntPolynomial& f) {
  if (f.degree() < 1) return 0;
  std::vector<IntPolynomial> chain{f.primitive_part(), f.derivative().primitive_part()};
  while (chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem carries lc(b)^(da - db + 1); the Sturm step needs -rem with a positive factor.
    const bool flip = sgn(b.lead()) < 0 && (a.degree() - b.degree() + 1) % 2 == 1;
    r = r.primitive_part();
    if (!flip) r = BigInt(-1) * r;
    chain.push_back(r);
  }
  if (chain.back().degree() > 0) throw NotSquarefree("real_root_count: polynomial has repeated roots");

  std::vector<int> at_pos, at_neg;
  for (const auto& p : chain) {
    const int s = sgn(p.lead());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 ? -s : s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace quintrank
