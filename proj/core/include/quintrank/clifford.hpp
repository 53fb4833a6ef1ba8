#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace quintrank {

/// Element of the real Clifford algebra on e_0, ..., e_{n-1} with e_i^2 = +1
/// and e_i e_j = -e_j e_i, stored exactly as
///   2^(-half_exponent / 2) * sum_B coeff_B e_B
/// with integer coefficients keyed by blade bitmask B.
class CliffordElement {
public:
  CliffordElement() = default;
  static CliffordElement scalar(std::int64_t c);
  /// (e_i - e_j) / sqrt(2): the unit vector whose reflection swaps i and j.
  static CliffordElement transposition_lift(int i, int j);

  const std::map<std::uint32_t, std::int64_t>& coefficients() const { return coeffs_; }
  int half_exponent() const { return half_exp_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// +1 if *this == other, -1 if *this == -other, nullopt otherwise.
  std::optional<int> relative_sign(const CliffordElement& other) const;

  std::string to_string() const;

  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) = default;

private:
  void normalize();

  std::map<std::uint32_t, std::int64_t> coeffs_;
  int half_exp_ = 0;
};

/// Sign of e_A e_B relative to e_{A xor B} under e_i^2 = +1.
int blade_product_sign(std::uint32_t a, std::uint32_t b);

}  // namespace quintrank
