#include "quintrank/icosian.hpp"

#include <algorithm>
#include <cmath>

namespace quintrank {

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& [a1, b1, c1, d1] = x.q;
  const auto& [a2, b2, c2, d2] = y.q;
  return Quaternion{{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                     a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
}

double Quaternion::distance(const Quaternion& other) const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += (q[i] - other.q[i]) * (q[i] - other.q[i]);
  return std::sqrt(s);
}

RepMatrix Quaternion::to_matrix() const {
  RepMatrix m(2, 2);
  m(0, 0) = Complex(q[0], q[1]);
  m(0, 1) = Complex(q[2], q[3]);
  m(1, 0) = Complex(-q[2], q[3]);
  m(1, 1) = Complex(q[0], -q[1]);
  return m;
}

double min_separation(const std::vector<Quaternion>& set) {
  double best = INFINITY;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) best = std::min(best, set[i].distance(set[j]));
  return best;
}

namespace {

std::vector<Quaternion> hurwitz_units() {
  std::vector<Quaternion> out;
  out.push_back(Quaternion{{1, 0, 0, 0}});
  for (int axis = 0; axis < 4; ++axis)
    for (double s : {1.0, -1.0}) {
      Quaternion x{{0, 0, 0, 0}};
      x.q[static_cast<std::size_t>(axis)] = s;
      if (axis == 0 && s > 0) continue;
      out.push_back(x);
    }
  for (int mask = 0; mask < 16; ++mask) {
    Quaternion x;
    for (int i = 0; i < 4; ++i) x.q[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -0.5 : 0.5;
    out.push_back(x);
  }
  return out;
}

std::vector<Quaternion> icosian_candidates() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Quaternion> out = hurwitz_units();
  const std::array<double, 4> base{0.0, 1.0, 1.0 / phi, phi};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2) continue;
    for (int signs = 0; signs < 8; ++signs) {
      Quaternion x;
      for (int pos = 0; pos < 4; ++pos) {
        const int src = perm[static_cast<std::size_t>(pos)];
        double v = base[static_cast<std::size_t>(src)] / 2.0;
        if (src > 0 && (signs >> (src - 1) & 1)) v = -v;
        x.q[static_cast<std::size_t>(pos)] = v;
      }
      out.push_back(x);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

QuaternionGroup close_quaternions(std::vector<Quaternion> candidates) {
  const double sep = min_separation(candidates);
  if (!(sep > 1e-3)) throw ClosureFailure("quaternion candidates are not separated");
  const std::size_t n = candidates.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Quaternion p = candidates[a] * candidates[b];
      std::size_t best = n;
      double best_d = INFINITY;
      for (std::size_t c = 0; c < n; ++c) {
        const double d = p.distance(candidates[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (best_d > 1e-9) throw ClosureFailure("quaternion product falls outside the candidate set");
      table[a * n + b] = static_cast<Element>(best);
    }
  // Greedy generating set in label order.
  std::vector<Element> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::size_t count = 1;
  for (std::size_t x = 1; x < n && count < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(static_cast<Element>(x));
    // Recompute the span of gens.
    std::fill(reached.begin(), reached.end(), 0);
    reached[0] = 1;
    std::vector<Element> frontier{0};
    count = 1;
    while (!frontier.empty()) {
      const Element a = frontier.back();
      frontier.pop_back();
      for (Element s : gens) {
        const Element b = table[a * n + s];
        if (!reached[b]) {
          reached[b] = 1;
          ++count;
          frontier.push_back(b);
        }
      }
    }
  }
  FiniteGroup g = FiniteGroup::from_table(n, std::move(table), std::move(gens));
  std::vector<RepMatrix> images;
  images.reserve(n);
  for (const auto& x : candidates) images.push_back(x.to_matrix());
  Representation rep(g, std::move(images));
  return {g, std::move(candidates), std::move(rep)};
}

}  // namespace

QuaternionGroup icosian_group() { return close_quaternions(icosian_candidates()); }

QuaternionGroup hurwitz_group() { return close_quaternions(hurwitz_units()); }

QuaternionGroup binary_octahedral_group() {
  std::vector<Quaternion> units = hurwitz_units();
  const double h = std::sqrt(0.5);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int signs = 0; signs < 4; ++signs) {
        Quaternion x{{0, 0, 0, 0}};
        x.q[static_cast<std::size_t>(a)] = (signs & 1) ? -h : h;
        x.q[static_cast<std::size_t>(b)] = (signs & 2) ? -h : h;
        units.push_back(x);
      }
  return close_quaternions(std::move(units));
}

}  // namespace quintrank
