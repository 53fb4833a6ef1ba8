#include "quintrank/cocycle.hpp"
#include "quintrank/linalg_mod2k.hpp"

#include <tuple>

namespace quintrank {

namespace {

// Linear system over Z/2^r given by (row, col, coefficient) triples.
struct SparseSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> entries;

  void add(std::size_t i, std::size_t j, std::int64_t v) { entries.emplace_back(i, j, v); }
};

void check_budget(const SparseSystem& s, unsigned r, const CohomologyLimits& limits) {
  const std::size_t bytes = r == 1 ? s.rows * ((s.cols + 64) / 64) * 8 : s.rows * s.cols * 4;
  if (bytes > limits.memory_budget_bytes)
    throw TooLarge("linear system of " + std::to_string(s.rows) + "x" + std::to_string(s.cols) +
                   " exceeds the memory budget");
}

Gf2Matrix to_gf2(const SparseSystem& s) {
  Gf2Matrix a(s.rows, s.cols);
  for (const auto& [i, j, v] : s.entries)
    if (v & 1) a.flip(i, j);
  return a;
}

ZmodMatrix to_zmod(const SparseSystem& s, unsigned r) {
  ZmodMatrix a(s.rows, s.cols, r);
  for (const auto& [i, j, v] : s.entries) a.add(i, j, v);
  return a;
}

std::size_t log2_image(const SparseSystem& s, unsigned r) {
  if (s.rows == 0 || s.cols == 0) return 0;
  return r == 1 ? to_gf2(s).rank() : to_zmod(s, r).log2_image_size();
}

// Column index of a normalized 1-cochain value c(g), g != 1.
std::size_t c1_index(Element g) { return g - 1; }

// delta^1 on normalized 1-cochains, rows indexed by (g, h) with g, h != 1.
SparseSystem delta1(const FiniteGroup& g, const CoefficientModule& m) {
  const std::size_t n = g.order();
  SparseSystem s;
  s.rows = (n - 1) * (n - 1);
  s.cols = n - 1;
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) {
      const std::size_t row = (a - 1) * (n - 1) + (b - 1);
      s.add(row, c1_index(b), m.action(a));
      const Element ab = g.mul(a, b);
      if (ab != 0) s.add(row, c1_index(ab), -1);
      s.add(row, c1_index(a), 1);
    }
  return s;
}

}  // namespace

int h1_dimension(const FiniteGroup& g, const CoefficientModule& m, const CohomologyLimits& limits) {
  if (g.order() > limits.max_group_order_h1)
    throw TooLarge("h1_dimension: group order " + std::to_string(g.order()) + " exceeds limit");
  const std::size_t n = g.order();
  const unsigned r = m.r();
  if (n == 1) return 0;

  // Crossed homomorphisms: c(gs) = c(g) + a_g c(s) for generators s suffices.
  SparseSystem z1;
  z1.cols = n - 1;
  for (Element a = 0; a < n; ++a)
    for (Element s : g.generators()) {
      const std::size_t row = z1.rows++;
      const Element as = g.mul(a, s);
      if (as != 0) z1.add(row, c1_index(as), 1);
      if (a != 0) z1.add(row, c1_index(a), -1);
      z1.add(row, c1_index(s), -m.action(a));
    }
  check_budget(z1, r, limits);
  const std::size_t log_z1 = r * z1.cols - log2_image(z1, r);

  // Principal crossed homomorphisms g -> a_g x - x.
  SparseSystem b1;
  b1.rows = n - 1;
  b1.cols = 1;
  for (Element a = 1; a < n; ++a)
    if (m.action(a) != 1) b1.add(a - 1, 0, m.action(a) - 1);
  const std::size_t log_b1 = log2_image(b1, r);
  return static_cast<int>(log_z1 - log_b1);
}

int h2_dimension(const FiniteGroup& g, const CoefficientModule& m, const CohomologyLimits& limits) {
  if (g.order() > limits.max_group_order_h2)
    throw TooLarge("h2_dimension: group order " + std::to_string(g.order()) + " exceeds limit");
  const std::size_t n = g.order();
  const unsigned r = m.r();
  if (n == 1) return 0;
  auto w = [n](Element a, Element b) { return (a - 1) * (n - 1) + (b - 1); };

  // Normalized 2-cocycles. The identity for all (g, h) and generators s is
  // associativity of the extension against a generating set, which implies it
  // for every third argument.
  SparseSystem z2;
  z2.cols = (n - 1) * (n - 1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element s : g.generators()) {
        const std::size_t row = z2.rows++;
        const Element ab = g.mul(a, b), bs = g.mul(b, s);
        // a_g w(h, s) - w(gh, s) + w(g, hs) - w(g, h)
        if (b != 0) z2.add(row, w(b, s), m.action(a));
        if (ab != 0) z2.add(row, w(ab, s), -1);
        if (a != 0 && bs != 0) z2.add(row, w(a, bs), 1);
        if (a != 0 && b != 0) z2.add(row, w(a, b), -1);
      }
  check_budget(z2, r, limits);
  const std::size_t log_z2 = r * z2.cols - log2_image(z2, r);

  const SparseSystem b2 = delta1(g, m);
  check_budget(b2, r, limits);
  const std::size_t log_b2 = log2_image(b2, r);
  return static_cast<int>(log_z2 - log_b2);
}

std::optional<Cochain1> coboundary_witness(const Cocycle2& omega) {
  const FiniteGroup& g = omega.group();
  const CoefficientModule& m = omega.module();
  const std::size_t n = g.order();
  if (n == 1) return Cochain1{0};
  const SparseSystem s = delta1(g, m);
  Cochain1 c(n, 0);
  if (m.r() == 1) {
    std::vector<std::uint8_t> rhs(s.rows);
    for (Element a = 1; a < n; ++a)
      for (Element b = 1; b < n; ++b) rhs[(a - 1) * (n - 1) + (b - 1)] = static_cast<std::uint8_t>(omega(a, b));
    const auto x = to_gf2(s).solve(rhs);
    if (!x) return std::nullopt;
    for (Element a = 1; a < n; ++a) c[a] = (*x)[c1_index(a)];
  } else {
    std::vector<std::uint32_t> rhs(s.rows);
    for (Element a = 1; a < n; ++a)
      for (Element b = 1; b < n; ++b) rhs[(a - 1) * (n - 1) + (b - 1)] = omega(a, b);
    const auto x = to_zmod(s, m.r()).solve(rhs);
    if (!x) return std::nullopt;
    for (Element a = 1; a < n; ++a) c[a] = (*x)[c1_index(a)];
  }
  return c;
}

}  // namespace quintrank
