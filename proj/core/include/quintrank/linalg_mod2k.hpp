#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace quintrank {

/// Dense matrix over the two-element field with rows packed into 64-bit words.
class Gf2Matrix {
public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (word(r, c) >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) { word(r, c) ^= std::uint64_t{1} << (c % 64); }

  std::size_t rank() const;
  /// Some x with A x = rhs (free variables zero), or nullopt if inconsistent.
  std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& rhs) const;

private:
  std::uint64_t& word(std::size_t r, std::size_t c) { return bits_[r * words_ + c / 64]; }
  const std::uint64_t& word(std::size_t r, std::size_t c) const { return bits_[r * words_ + c / 64]; }

  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Dense matrix over Z/2^r (1 <= r <= 30), reduced to a Smith-like diagonal
/// by pivoting on entries of least 2-adic valuation.
class ZmodMatrix {
public:
  ZmodMatrix(std::size_t rows, std::size_t cols, unsigned r);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned r() const { return r_; }
  std::uint32_t get(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * cols_ + j] = static_cast<std::uint32_t>(v & mask_); }
  void add(std::size_t i, std::size_t j, std::int64_t v);

  /// 2-adic valuations of the nonzero diagonal entries (each < r).
  std::vector<unsigned> diagonal_valuations() const;
  /// log2 of the size of the image submodule.
  std::size_t log2_image_size() const;
  /// log2 of the size of the kernel submodule of (Z/2^r)^cols.
  std::size_t log2_kernel_size() const { return r_ * cols_ - log2_image_size(); }
  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& rhs) const;

private:
  struct Reduction;
  Reduction reduce(std::vector<std::uint32_t>* rhs) const;

  std::size_t rows_, cols_;
  unsigned r_;
  std::uint32_t mask_;
  std::vector<std::uint32_t> a_;
};

}  // namespace quintrank
