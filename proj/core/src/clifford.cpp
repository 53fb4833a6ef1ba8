#include "quintrank/clifford.hpp"

#include <bit>
#include <sstream>

namespace quintrank {

int blade_product_sign(std::uint32_t a, std::uint32_t b) {
  // Count pairs (x in A, y in B) with x > y: each needs one transposition.
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  return (swaps & 1) ? -1 : 1;
}

CliffordElement CliffordElement::scalar(std::int64_t c) {
  CliffordElement x;
  if (c != 0) x.coeffs_[0] = c;
  x.normalize();
  return x;
}

CliffordElement CliffordElement::transposition_lift(int i, int j) {
  CliffordElement x;
  x.coeffs_[std::uint32_t{1} << i] = 1;
  x.coeffs_[std::uint32_t{1} << j] = -1;
  x.half_exp_ = 1;
  return x;
}

void CliffordElement::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  if (coeffs_.empty()) {
    half_exp_ = 0;
    return;
  }
  for (;;) {
    for (const auto& [blade, c] : coeffs_)
      if (c % 2 != 0) return;
    for (auto& [blade, c] : coeffs_) c /= 2;
    half_exp_ -= 2;
  }
}

std::optional<int> CliffordElement::relative_sign(const CliffordElement& other) const {
  if (*this == other) return 1;
  if (half_exp_ != other.half_exp_ || coeffs_.size() != other.coeffs_.size()) return std::nullopt;
  for (const auto& [blade, c] : coeffs_) {
    auto it = other.coeffs_.find(blade);
    if (it == other.coeffs_.end() || it->second != -c) return std::nullopt;
  }
  return -1;
}

std::string CliffordElement::to_string() const {
  std::ostringstream os;
  os << "2^(-" << half_exp_ << "/2)*(";
  bool first = true;
  for (const auto& [blade, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < 32; ++i)
      if (blade & (std::uint32_t{1} << i)) os << "e" << i;
  }
  os << ')';
  return os.str();
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out;
  for (const auto& [ba, ca] : a.coeffs_)
    for (const auto& [bb, cb] : b.coeffs_) out.coeffs_[ba ^ bb] += blade_product_sign(ba, bb) * ca * cb;
  out.half_exp_ = a.half_exp_ + b.half_exp_;
  out.normalize();
  return out;
}

}  // namespace quintrank
