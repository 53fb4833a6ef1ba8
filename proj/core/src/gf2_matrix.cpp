#include "quintrank/linalg_mod2k.hpp"

#include <stdexcept>

namespace quintrank {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 64) / 64), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  const auto bit = std::uint64_t{1} << (c % 64);
  if (v)
    word(r, c) |= bit;
  else
    word(r, c) &= ~bit;
}

namespace {

// Row-reduces packed rows in place over `ncols` columns; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& bits, std::size_t rows, std::size_t words,
                                   std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t p = top;
    while (p < rows && !(bits[p * words + w] & bit)) ++p;
    if (p == rows) continue;
    if (p != top)
      for (std::size_t k = 0; k < words; ++k) std::swap(bits[p * words + k], bits[top * words + k]);
    const std::uint64_t* pivot = &bits[top * words];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == top || !(bits[i * words + w] & bit)) continue;
      std::uint64_t* row = &bits[i * words];
      for (std::size_t k = 0; k < words; ++k) row[k] ^= pivot[k];
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  auto copy = bits_;
  return eliminate(copy, rows_, words_, cols_).size();
}

std::optional<std::vector<std::uint8_t>> Gf2Matrix::solve(const std::vector<std::uint8_t>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("Gf2Matrix::solve: rhs size mismatch");
  // The spare bit column at index cols_ (words_ always has room) holds the rhs.
  auto aug = bits_;
  const std::size_t w = cols_ / 64;
  const std::uint64_t bit = std::uint64_t{1} << (cols_ % 64);
  for (std::size_t i = 0; i < rows_; ++i)
    if (rhs[i] & 1) aug[i * words_ + w] |= bit;
  const auto pivots = eliminate(aug, rows_, words_, cols_);
  for (std::size_t i = pivots.size(); i < rows_; ++i)
    if (aug[i * words_ + w] & bit) return std::nullopt;
  std::vector<std::uint8_t> x(cols_, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = (aug[k * words_ + w] & bit) ? 1 : 0;
  return x;
}

}  // namespace quintrank
