#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/arith.hpp"

namespace quintrank {

/// Dense integer polynomial; coefficient i multiplies x^i. The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  /// From coefficients listed from the leading term down, e.g. {1, 0, 0, 0, -1, -1}.
  static IntPolynomial from_descending(const std::vector<BigInt>& coeffs);
  static IntPolynomial from_descending(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const BigInt& lead() const { return c_.back(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  /// Leading term first.
  std::vector<BigInt> descending() const;

  BigInt operator()(const BigInt& x) const;
  IntPolynomial derivative() const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  IntPolynomial primitive_part() const;
  /// f(x + k)
  IntPolynomial shifted(long k) const;
  /// x^d f(1/x), reversed coefficients.
  IntPolynomial reversed() const;

  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

private:
  void trim();
  std::vector<BigInt> c_;
};

/// lc(b)^(deg a - deg b + 1) a mod b, computed without fractions.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Exact division by a nonzero integer; throws if some coefficient is not divisible.
IntPolynomial divide_exact(const IntPolynomial& a, const BigInt& k);

/// Res(a, b) by the subresultant remainder sequence.
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f) for deg f = d >= 2.
BigInt poly_discriminant(const IntPolynomial& f);

class NotSquarefree : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Number of distinct real roots from a Sturm sequence built with
/// sign-corrected pseudo-remainders. Throws NotSquarefree if gcd(f, f') is
/// not constant.
int real_root_count(const IntPolynomial& f);

}  // namespace quintrank
