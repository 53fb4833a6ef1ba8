#include "quintrank/abelian.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace quintrank {

SmithForm smith_normal_form(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw std::invalid_argument("smith_normal_form: shape mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::vector<std::int64_t> v(cols * cols, 0);
  for (std::size_t j = 0; j < cols; ++j) v[j * cols + j] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i * cols + j], v[i * cols + k]);
  };

  SmithForm out;
  out.cols = cols;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (at(i, j) != 0 && std::llabs(at(i, j)) < best) {
            best = std::llabs(at(i, j));
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      const std::int64_t p = at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        const std::int64_t q = at(i, t) / p;
        for (std::size_t j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        const std::int64_t q = at(t, j) / p;
        for (std::size_t i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        for (std::size_t i = 0; i < cols; ++i) v[i * cols + j] -= q * v[i * cols + t];
        if (at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (at(i, j) % p != 0) {
            for (std::size_t k = t; k < cols; ++k) at(t, k) += at(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (at(t, t) == 0) break;
    out.diagonal.push_back(std::llabs(at(t, t)));
  }
  out.column_transform = std::move(v);
  return out;
}

std::size_t AbelianQuotient::order() const {
  std::size_t n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

std::uint64_t AbelianQuotient::label_of(const std::vector<std::uint64_t>& coords) const {
  std::uint64_t label = 0;
  for (std::size_t t = 0; t < factors_.size(); ++t) label = label * factors_[t] + coords[t];
  return label;
}

std::uint64_t AbelianQuotient::label(Element g) const { return label_of(coordinates(g)); }

AbelianQuotient abelianization(const FiniteGroup& g) {
  AbelianQuotient out;
  out.kernel_ = derived_subgroup(g);
  const Quotient q = quotient(g, out.kernel_);
  const FiniteGroup& a = q.group;
  const std::size_t k = a.generators().size();
  const std::size_t n = a.order();

  // Exponent vector of the breadth-first word for each quotient element.
  std::vector<std::vector<std::int64_t>> word_vec(n, std::vector<std::int64_t>(k, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (auto s : a.words()[x]) ++word_vec[x][s];

  // Spanning-tree relations w(x) + e_j - w(x * s_j) generate the kernel of Z^k -> A.
  std::vector<std::int64_t> rel;
  std::size_t rows = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < k; ++j) {
      const Element y = a.mul(static_cast<Element>(x), a.generators()[j]);
      for (std::size_t c = 0; c < k; ++c)
        rel.push_back(word_vec[x][c] + (c == j ? 1 : 0) - word_vec[y][c]);
      ++rows;
    }

  std::vector<std::vector<std::uint64_t>> quotient_coords(n);
  if (k > 0) {
    const SmithForm snf = smith_normal_form(std::move(rel), rows, k);
    if (snf.diagonal.size() != k) throw std::logic_error("abelianization: relation lattice is not full rank");
    std::vector<std::size_t> kept;
    for (std::size_t t = 0; t < k; ++t)
      if (snf.diagonal[t] > 1) {
        kept.push_back(t);
        out.factors_.push_back(static_cast<std::uint64_t>(snf.diagonal[t]));
      }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t idx = 0; idx < kept.size(); ++idx) {
        const std::size_t t = kept[idx];
        std::int64_t y = 0;
        for (std::size_t c = 0; c < k; ++c) y += word_vec[x][c] * snf.column_transform[c * k + t];
        const auto d = snf.diagonal[t];
        quotient_coords[x].push_back(static_cast<std::uint64_t>(((y % d) + d) % d));
      }
    }
  }
  out.coords_.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) out.coords_[x] = quotient_coords[q.projection[x]];
  return out;
}

}  // namespace quintrank
