#include "quintrank/poly_modp.hpp"

#include <algorithm>
#include <array>

namespace quintrank {

std::string FactorPattern::to_string() const {
  if (!squarefree) return "ramified";
  std::string s = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + "}";
}

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr int kMaxDegree = 7;

struct Field {
  std::uint64_t p;
  bool small;  // p < 2^32, so products fit in 64 bits

  explicit Field(std::uint64_t prime) : p(prime), small(prime < (std::uint64_t{1} << 32)) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return small ? a * b % p : static_cast<std::uint64_t>(u128(a) * b % p);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p - b); }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

// Fixed-capacity polynomial over Z/p; deg == -1 for zero.
struct Poly {
  std::array<std::uint64_t, 2 * kMaxDegree + 2> c{};
  int deg = -1;

  void trim() {
    while (deg >= 0 && c[static_cast<std::size_t>(deg)] == 0) --deg;
  }
  std::uint64_t lead() const { return c[static_cast<std::size_t>(deg)]; }
};

// a mod m for monic m.
void reduce(Poly& a, const Poly& m, const Field& f) {
  while (a.deg >= m.deg) {
    const std::uint64_t t = a.lead();
    const int shift = a.deg - m.deg;
    if (t != 0)
      for (int j = 0; j < m.deg; ++j) {
        auto& x = a.c[static_cast<std::size_t>(shift + j)];
        x = f.sub(x, f.mul(t, m.c[static_cast<std::size_t>(j)]));
      }
    a.c[static_cast<std::size_t>(a.deg)] = 0;
    --a.deg;
    a.trim();
  }
}

void make_monic(Poly& a, const Field& f) {
  if (a.deg < 0 || a.lead() == 1) return;
  const std::uint64_t li = f.inv(a.lead());
  for (int i = 0; i <= a.deg; ++i) a.c[static_cast<std::size_t>(i)] = f.mul(a.c[static_cast<std::size_t>(i)], li);
}

// Degree of gcd(a, b); the monic gcd is left in a.
int gcd_in_place(Poly& a, Poly b, const Field& f) {
  Poly* x = &a;
  Poly* y = &b;
  while (y->deg >= 0) {
    make_monic(*y, f);
    reduce(*x, *y, f);
    std::swap(x, y);
  }
  if (x != &a) a = *x;
  make_monic(a, f);
  return a.deg;
}

// Quotient of a by monic m (remainder assumed zero).
Poly divide(Poly a, const Poly& m, const Field& f) {
  Poly q;
  q.deg = a.deg - m.deg;
  while (a.deg >= m.deg) {
    const std::uint64_t t = a.lead();
    const int shift = a.deg - m.deg;
    q.c[static_cast<std::size_t>(shift)] = t;
    for (int j = 0; j < m.deg; ++j) {
      auto& x = a.c[static_cast<std::size_t>(shift + j)];
      x = f.sub(x, f.mul(t, m.c[static_cast<std::size_t>(j)]));
    }
    a.c[static_cast<std::size_t>(a.deg)] = 0;
    --a.deg;
    a.trim();
  }
  q.trim();
  return q;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& f) {
  Poly out;
  if (a.deg < 0 || b.deg < 0) return out;
  out.deg = a.deg + b.deg;
  for (int i = 0; i <= a.deg; ++i) {
    const std::uint64_t ai = a.c[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j <= b.deg; ++j) {
      auto& x = out.c[static_cast<std::size_t>(i + j)];
      x += f.mul(ai, b.c[static_cast<std::size_t>(j)]);
      if (x >= f.p) x -= f.p;
    }
  }
  out.trim();
  reduce(out, m, f);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, const Field& f) {
  Poly r;
  r.c[0] = 1;
  r.deg = 0;
  reduce(base, m, f);
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, base, m, f);
    if (e > 1) base = mulmod(base, base, m, f);
  }
  return r;
}

}  // namespace

FactorPattern factor_pattern_mod_p(const IntPolynomial& poly, std::uint64_t p) {
  if (poly.degree() < 1) throw std::invalid_argument("factor_pattern_mod_p: need positive degree");
  if (poly.degree() > kMaxDegree) throw std::invalid_argument("factor_pattern_mod_p: degree too large");
  if (p < 2 || p >> 63) throw std::invalid_argument("factor_pattern_mod_p: prime out of range");
  const Field f(p);
  Poly a;
  a.deg = poly.degree();
  for (int i = 0; i <= a.deg; ++i) a.c[static_cast<std::size_t>(i)] = mpz_fdiv_ui(poly.coeff(i).get_mpz_t(), p);
  if (a.lead() == 0) throw LeadingCoeffVanishes("factor_pattern_mod_p: p divides the leading coefficient");
  make_monic(a, f);

  Poly da;
  da.deg = a.deg - 1;
  for (int i = 1; i <= a.deg; ++i)
    da.c[static_cast<std::size_t>(i - 1)] = f.mul(a.c[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(i) % p);
  da.trim();
  FactorPattern out;
  Poly g0 = a;
  if (gcd_in_place(g0, da, f) != 0) return out;
  out.squarefree = true;

  // Distinct-degree factorization: gcd(x^(p^d) - x, a) collects the degree-d factors.
  Poly h;
  h.c[1] = 1;
  h.deg = 1;
  for (int d = 1; 2 * d <= a.deg; ++d) {
    h = powmod(h, p, a, f);
    Poly hx = h;
    if (hx.deg < 1) hx.deg = 1;
    hx.c[1] = f.sub(hx.c[1], 1);
    hx.trim();
    Poly g = hx;
    if (gcd_in_place(g, a, f) > 0) {
      for (int k = 0; k < g.deg / d; ++k) out.degrees.push_back(d);
      a = divide(a, g, f);
      reduce(h, a, f);
    }
  }
  if (a.deg > 0) out.degrees.push_back(a.deg);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace quintrank
