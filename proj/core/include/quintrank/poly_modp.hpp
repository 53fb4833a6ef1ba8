#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/polynomial.hpp"

namespace quintrank {

class LeadingCoeffVanishes : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FactorPattern {
  bool squarefree = false;
  std::vector<int> degrees;  // sorted ascending; empty unless squarefree

  std::string to_string() const;
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Degrees of the irreducible factors of f mod p (p prime, p < 2^63) by
/// distinct-degree factorization; deg f <= 7. Throws LeadingCoeffVanishes if
/// p | lc(f).
FactorPattern factor_pattern_mod_p(const IntPolynomial& f, std::uint64_t p);

}  // namespace quintrank
