#pragma once
// Independent reference computations used to check the library. Nothing here
// calls into the code under test except for the group tables it inspects.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quintrank/finite_group.hpp"

namespace oracle {

using Big = mpz_class;

/// Legendre symbol by listing the squares mod an odd prime p.
inline int legendre_by_residues(const Big& a, unsigned long p) {
  const unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), p);
  if (r == 0) return 0;
  for (unsigned long x = 1; x <= p / 2; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

/// Jacobi symbol for odd n > 0 by trial factoring n and multiplying Legendre symbols.
inline int jacobi_by_residues(const Big& a, unsigned long n) {
  int out = 1;
  for (unsigned long p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      out *= legendre_by_residues(a, p);
      n /= p;
    }
  }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Big bareiss_det(std::vector<std::vector<Big>> m) {
  const std::size_t n = m.size();
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Big t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Discriminant from the Sylvester matrix of f and f'; `desc` lists the
/// coefficients from the leading term down.
inline Big sylvester_discriminant(const std::vector<Big>& desc) {
  const std::size_t n = desc.size() - 1;
  std::vector<Big> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(desc[i] * static_cast<unsigned long>(n - i));
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<Big>> m(size, std::vector<Big>(size, 0));
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t j = 0; j <= n; ++j) m[r][r + j] = desc[j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) m[n - 1 + r][r + j] = d[j];
  Big res = bareiss_det(std::move(m));
  if ((n * (n - 1) / 2) % 2) res = -res;
  mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), desc[0].get_mpz_t());
  return res;
}

namespace detail {

// Polynomials here are ascending coefficient vectors.
inline int sign_variations(const std::vector<Big>& p) {
  int v = 0, last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline std::vector<Big> taylor_shift_one(std::vector<Big> p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += p[j];
  return p;
}

// Roots in the open interval (0, 1), by Descartes' rule on bisected pieces.
inline int roots_in_unit_interval(const std::vector<Big>& q) {
  std::vector<Big> rev(q.rbegin(), q.rend());
  const int var = sign_variations(taylor_shift_one(rev));
  if (var < 2) return var;
  const std::size_t n = q.size() - 1;
  std::vector<Big> left(q.size());
  for (std::size_t i = 0; i <= n; ++i) {
    Big scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - i);
    left[i] = q[i] * scale;
  }
  const std::vector<Big> right = taylor_shift_one(left);
  const int mid = right[0] == 0 ? 1 : 0;  // right(0) = left(1) = 2^n q(1/2)
  return roots_in_unit_interval(left) + mid + roots_in_unit_interval(right);
}

inline int positive_roots(const std::vector<Big>& p) {
  Big bound = 0;
  const Big lead = abs(p.back());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Big(abs(p[i])));
  bound = bound / lead + 2;
  std::vector<Big> q(p.size());
  Big power = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = p[i] * power;
    power *= bound;
  }
  return roots_in_unit_interval(q);
}

}  // namespace detail

/// Distinct real roots of a squarefree polynomial by bisection with Descartes'
/// rule of signs (exact integer arithmetic); `desc` is leading term first.
inline int bisection_real_roots(const std::vector<Big>& desc) {
  std::vector<Big> p(desc.rbegin(), desc.rend());
  std::vector<Big> neg = p;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return (p[0] == 0 ? 1 : 0) + detail::positive_roots(p) + detail::positive_roots(neg);
}

/// Number of roots of f in the field with p elements, by evaluation.
inline int roots_mod_p(const std::vector<Big>& desc, unsigned long p) {
  int count = 0;
  for (unsigned long x = 0; x < p; ++x) {
    Big v = 0;
    for (const auto& c : desc) v = v * x + c;
    if (mpz_fdiv_ui(v.get_mpz_t(), p) == 0) ++count;
  }
  return count;
}

/// Number of homomorphisms G -> Z/2, by trying every assignment on the generators.
inline std::size_t homs_to_c2(const quintrank::FiniteGroup& g) {
  const auto gens = g.generators();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<int> val(g.order(), -1);
    val[0] = 0;
    std::vector<quintrank::Element> todo{0};
    bool ok = true;
    while (!todo.empty() && ok) {
      const auto a = todo.back();
      todo.pop_back();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const auto b = g.mul(a, gens[s]);
        const int v = val[a] ^ static_cast<int>(mask >> s & 1);
        if (val[b] < 0) {
          val[b] = v;
          todo.push_back(b);
        } else if (val[b] != v) {
          ok = false;
        }
      }
    }
    for (std::size_t a = 0; ok && a < g.order(); ++a)
      for (std::size_t b = 0; ok && b < g.order(); ++b)
        ok = val[g.mul(static_cast<quintrank::Element>(a), static_cast<quintrank::Element>(b))] == (val[a] ^ val[b]);
    if (ok) ++count;
  }
  return count;
}

/// Rank over the two-element field of a set of bit rows.
class Gf2Basis {
public:
  explicit Gf2Basis(std::size_t bits) : words_((bits + 63) / 64), pivots_(bits, -1) {}
  void insert(std::vector<std::uint64_t> row) {
    for (std::size_t w = 0; w < words_; ++w) {
      while (row[w]) {
        const std::size_t bit = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
        if (pivots_[bit] < 0) {
          pivots_[bit] = static_cast<long>(rows_.size());
          rows_.push_back(std::move(row));
          return;
        }
        const auto& b = rows_[static_cast<std::size_t>(pivots_[bit])];
        for (std::size_t k = 0; k < words_; ++k) row[k] ^= b[k];
      }
    }
  }
  std::size_t rank() const { return rows_.size(); }
  std::size_t words() const { return words_; }

private:
  std::size_t words_;
  std::vector<long> pivots_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// dim H^2(G, Z/2) with trivial action from the definitions: normalized
/// cocycles are solutions of the cocycle identities in the unknowns w(g, h),
/// g, h != 1; coboundaries are the span of the delta of point masses.
inline std::size_t h2_trivial_c2(const quintrank::FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t m = n - 1;
  auto var = [&](std::size_t a, std::size_t b) -> long {
    if (a == 0 || b == 0) return -1;
    return static_cast<long>((a - 1) * m + (b - 1));
  };
  auto flip = [](std::vector<std::uint64_t>& row, long v) {
    if (v >= 0) row[static_cast<std::size_t>(v) / 64] ^= std::uint64_t{1} << (v % 64);
  };
  Gf2Basis eqs(m * m);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c) {
        std::vector<std::uint64_t> row(eqs.words(), 0);
        const auto ab = g.mul(static_cast<quintrank::Element>(a), static_cast<quintrank::Element>(b));
        const auto bc = g.mul(static_cast<quintrank::Element>(b), static_cast<quintrank::Element>(c));
        flip(row, var(b, c));
        flip(row, var(ab, c));
        flip(row, var(a, bc));
        flip(row, var(a, b));
        eqs.insert(std::move(row));
      }
  Gf2Basis bounds(m * m);
  for (std::size_t x = 1; x < n; ++x) {
    std::vector<std::uint64_t> row(bounds.words(), 0);
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b) {
        const auto ab = g.mul(static_cast<quintrank::Element>(a), static_cast<quintrank::Element>(b));
        const int v = (b == x) + (ab == x) + (a == x);
        if (v % 2) flip(row, var(a, b));
      }
    bounds.insert(std::move(row));
  }
  return m * m - eqs.rank() - bounds.rank();
}

/// A 1-cochain c with c(a) + c(b) + c(ab) = w(a, b) for all a, b (values in
/// Z/2, trivial action), by trying every value pattern on the generators and
/// propagating along words.
inline std::optional<std::vector<int>> c2_coboundary_by_search(const quintrank::FiniteGroup& g,
                                                              const std::vector<std::uint32_t>& w) {
  const std::size_t n = g.order();
  const auto gens = g.generators();
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<int> c(n, -1);
    c[0] = 0;
    std::vector<quintrank::Element> todo{0};
    bool ok = true;
    while (!todo.empty() && ok) {
      const auto a = todo.back();
      todo.pop_back();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const auto b = g.mul(a, gens[s]);
        const int v = c[a] ^ static_cast<int>(mask >> s & 1) ^ static_cast<int>(w[a * n + gens[s]] & 1);
        if (c[b] < 0) {
          c[b] = v;
          todo.push_back(b);
        } else if (c[b] != v) {
          ok = false;
        }
      }
    }
    for (std::size_t a = 0; ok && a < n; ++a)
      for (std::size_t b = 0; ok && b < n; ++b) {
        const auto ab = g.mul(static_cast<quintrank::Element>(a), static_cast<quintrank::Element>(b));
        ok = (c[a] ^ c[b] ^ c[ab]) == static_cast<int>(w[a * n + b] & 1);
      }
    if (ok) return c;
  }
  return std::nullopt;
}

/// Floating-point Clifford algebra with e_i^2 = +1, blades as sorted index
/// lists, used to recompute the Pin lift signs.
class Multivector {
public:
  static Multivector scalar(double s) {
    Multivector m;
    m.terms_[{}] = s;
    return m;
  }
  static Multivector reflection(int i, int j) {
    Multivector m;
    m.terms_[{i}] = 1.0 / std::sqrt(2.0);
    m.terms_[{j}] = -1.0 / std::sqrt(2.0);
    return m;
  }
  friend Multivector operator*(const Multivector& x, const Multivector& y) {
    Multivector out;
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        // Bubble the concatenated index word into order, cancelling e_i e_i = 1.
        std::vector<int> word(a);
        word.insert(word.end(), b.begin(), b.end());
        int sign = 1;
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] > word[k + 1]) {
              std::swap(word[k], word[k + 1]);
              sign = -sign;
              changed = true;
            } else if (word[k] == word[k + 1]) {
              word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
              changed = true;
              break;
            }
          }
        }
        out.terms_[word] += sign * ca * cb;
      }
    return out;
  }
  /// +1 or -1 if *this == +-other within tol, 0 otherwise.
  int relative_sign(const Multivector& other, double tol = 1e-9) const {
    for (int s : {1, -1}) {
      bool same = true;
      std::map<std::vector<int>, double> diff = terms_;
      for (const auto& [k, v] : other.terms_) diff[k] -= s * v;
      for (const auto& [k, v] : diff) same = same && std::abs(v) < tol;
      if (same) return s;
    }
    return 0;
  }

private:
  std::map<std::vector<int>, double> terms_;
};

/// Swaps that sort an image array from left to right; their product in order
/// is the permutation itself.
inline std::vector<std::pair<int, int>> sorting_swaps(std::vector<int> img) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(img.size()); ++i) {
    const int j = img[static_cast<std::size_t>(i)];
    if (j == i) continue;
    for (auto& v : img) {
      if (v == i)
        v = j;
      else if (v == j)
        v = i;
    }
    out.emplace_back(i, j);
  }
  return out;
}

}  // namespace oracle
