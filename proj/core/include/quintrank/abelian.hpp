#pragma once

#include <cstdint>
#include <vector>

#include "quintrank/finite_group.hpp"
#include "quintrank/subgroup.hpp"

namespace quintrank {

/// Smith normal form of an integer matrix (row-major, rows x cols).
/// Returns the nonzero diagonal d_1 | d_2 | ... and the unimodular column
/// transform V (cols x cols) with U * A * V = diag(d).
struct SmithForm {
  std::vector<std::int64_t> diagonal;
  std::vector<std::int64_t> column_transform;  // row-major cols x cols
  std::size_t cols = 0;
};
SmithForm smith_normal_form(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols);

/// G / [G, G] presented as a product of cyclic groups Z/d_1 x ... x Z/d_k,
/// d_1 | ... | d_k, all d_i > 1 (so the trivial group has no factors).
class AbelianQuotient {
public:
  std::size_t order() const;
  const std::vector<std::uint64_t>& factors() const { return factors_; }
  /// Coordinates of the image of g, one per cyclic factor.
  const std::vector<std::uint64_t>& coordinates(Element g) const { return coords_.at(g); }
  /// Mixed-radix label of the image of g in [0, order()).
  std::uint64_t label(Element g) const;
  std::uint64_t label_of(const std::vector<std::uint64_t>& coords) const;
  const Subgroup& kernel() const { return kernel_; }

  friend AbelianQuotient abelianization(const FiniteGroup& g);

private:
  std::vector<std::uint64_t> factors_;
  std::vector<std::vector<std::uint64_t>> coords_;
  Subgroup kernel_;
};

AbelianQuotient abelianization(const FiniteGroup& g);

}  // namespace quintrank
