#include "quintrank/linalg_mod2k.hpp"

#include <bit>
#include <stdexcept>

namespace quintrank {

namespace {

unsigned valuation(std::uint32_t x, unsigned r) {
  return x == 0 ? r : static_cast<unsigned>(std::countr_zero(x));
}

// Inverse of an odd number modulo 2^32 by Newton iteration; callers mask.
std::uint32_t odd_inverse(std::uint32_t u) {
  std::uint32_t x = u;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) x *= 2u - u * x;
  return x;
}

}  // namespace

ZmodMatrix::ZmodMatrix(std::size_t rows, std::size_t cols, unsigned r)
    : rows_(rows), cols_(cols), r_(r), mask_(r >= 32 ? ~0u : ((1u << r) - 1u)), a_(rows * cols, 0) {
  if (r == 0 || r > 30) throw std::invalid_argument("ZmodMatrix: r must lie in [1, 30]");
}

void ZmodMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  auto& e = a_[i * cols_ + j];
  e = static_cast<std::uint32_t>((static_cast<std::int64_t>(e) + v) & static_cast<std::int64_t>(mask_));
}

struct ZmodMatrix::Reduction {
  std::vector<unsigned> valuations;     // diagonal valuations, ascending
  std::vector<std::uint32_t> transform;  // cols x cols column transform (only when solving)
};

ZmodMatrix::Reduction ZmodMatrix::reduce(std::vector<std::uint32_t>* rhs) const {
  auto a = a_;
  const std::size_t m = rows_, n = cols_;
  const std::uint32_t mask = mask_;
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return a[i * n + j]; };
  Reduction out;
  const bool track = rhs != nullptr;
  if (track) {
    out.transform.assign(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) out.transform[j * n + j] = 1;
  }
  // Column permutation is tracked implicitly through the transform; without
  // tracking we still need consistent column order.
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    unsigned best = r_;
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m && best > 0; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const unsigned v = valuation(at(i, j), r_);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi == m) break;
    if (bi != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(bi, j), at(t, j));
      if (track) std::swap((*rhs)[bi], (*rhs)[t]);
    }
    if (bj != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(at(i, bj), at(i, t));
      if (track)
        for (std::size_t i = 0; i < n; ++i) std::swap(out.transform[i * n + bj], out.transform[i * n + t]);
    }
    // Scale the pivot row so the pivot is exactly 2^best.
    const std::uint32_t unit_inv = odd_inverse(at(t, t) >> best);
    for (std::size_t j = t; j < n; ++j) at(t, j) = (at(t, j) * unit_inv) & mask;
    if (track) (*rhs)[t] = ((*rhs)[t] * unit_inv) & mask;

    for (std::size_t i = t + 1; i < m; ++i) {
      const std::uint32_t e = at(i, t);
      if (e == 0) continue;
      const std::uint32_t factor = e >> best;
      for (std::size_t j = t; j < n; ++j) at(i, j) = (at(i, j) - factor * at(t, j)) & mask;
      if (track) (*rhs)[i] = ((*rhs)[i] - factor * (*rhs)[t]) & mask;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      const std::uint32_t e = at(t, j);
      if (e == 0) continue;
      const std::uint32_t factor = e >> best;
      // Rows below t already vanish in column t; only row t changes.
      at(t, j) = 0;
      if (track)
        for (std::size_t i = 0; i < n; ++i)
          out.transform[i * n + j] = (out.transform[i * n + j] - factor * out.transform[i * n + t]) & mask;
    }
    out.valuations.push_back(best);
  }
  return out;
}

std::vector<unsigned> ZmodMatrix::diagonal_valuations() const { return reduce(nullptr).valuations; }

std::size_t ZmodMatrix::log2_image_size() const {
  std::size_t total = 0;
  for (unsigned v : diagonal_valuations()) total += r_ - v;
  return total;
}

std::optional<std::vector<std::uint32_t>> ZmodMatrix::solve(const std::vector<std::uint32_t>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("ZmodMatrix::solve: rhs size mismatch");
  std::vector<std::uint32_t> b(rhs.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = rhs[i] & mask_;
  const Reduction red = reduce(&b);
  const std::size_t rank = red.valuations.size();
  std::vector<std::uint32_t> y(cols_, 0);
  for (std::size_t t = 0; t < rank; ++t) {
    const unsigned v = red.valuations[t];
    if (valuation(b[t], r_) < v) return std::nullopt;
    y[t] = b[t] >> v;
  }
  for (std::size_t i = rank; i < rows_; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<std::uint32_t> x(cols_, 0);
  for (std::size_t i = 0; i < cols_; ++i) {
    std::uint32_t s = 0;
    for (std::size_t t = 0; t < cols_; ++t) s += red.transform[i * cols_ + t] * y[t];
    x[i] = s & mask_;
  }
  return x;
}

}  // namespace quintrank
