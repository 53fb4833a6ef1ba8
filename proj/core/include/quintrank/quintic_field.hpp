#pragma once

#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/galois.hpp"
#include "quintrank/polynomial.hpp"

namespace quintrank {

class FieldCache;

enum class FieldRejection { NotQuintic, NotMonic, NotSeparable };
std::string to_string(FieldRejection r);

class FieldRejected : public std::runtime_error {
public:
  FieldRejected(FieldRejection r, const std::string& what) : std::runtime_error(what), reason_(r) {}
  FieldRejection reason() const { return reason_; }

private:
  FieldRejection reason_;
};

/// A monic integer quintic with its derived arithmetic data.
struct QuinticField {
  std::string label;
  IntPolynomial poly;
  BigInt disc;
  int r1 = 0;
  int r2 = 0;
  ResolventData resolvent;
  S5Certificate s5;
  /// Squarefree kernel of disc and the factor patterns at the first good
  /// primes, e.g. "2869;{1,2,2}/{5}/...".
  std::string fingerprint;

  /// Coefficients from the leading term down.
  std::vector<BigInt> coeffs() const { return poly.descending(); }
  bool certified() const { return s5.status == S5Status::Certified; }
};

/// "1,0,0,0,-1,-1"
std::string coefficient_key(const IntPolynomial& f);
/// Parses "a5,a4,a3,a2,a1,a0"; throws std::invalid_argument on malformed input.
IntPolynomial parse_coefficients(const std::string& text);

/// Factor patterns at the first `count` primes not dividing disc, starting
/// after `skip` such primes.
std::vector<FactorPattern> good_prime_patterns(const IntPolynomial& f, const BigInt& disc, std::size_t skip,
                                               std::size_t count);

struct FieldOptions {
  std::size_t prime_budget = kDefaultPrimeBudget;
  std::size_t fingerprint_primes = 20;
};

/// Derives QuinticField records, consulting an optional cache keyed by the
/// coefficient vector. Rejected and out-of-bound polynomials are cached by
/// discriminant only. Safe to call from several threads.
class FieldBuilder {
public:
  explicit FieldBuilder(FieldOptions options = {}, FieldCache* cache = nullptr);

  /// Throws FieldRejected for non-monic, non-quintic or inseparable input.
  QuinticField build(std::string label, const IntPolynomial& f) const;
  /// As build, but returns nullopt without further work when |disc| > max_abs_disc.
  std::optional<QuinticField> build_bounded(std::string label, const IntPolynomial& f, const BigInt& max_abs_disc) const;

  const FieldOptions& options() const { return options_; }
  std::size_t discriminant_computations() const { return disc_count_.load(); }
  std::size_t cache_hits() const { return cache_hits_.load(); }

private:
  QuinticField derive(std::string label, const IntPolynomial& f, const BigInt& disc) const;
  BigInt discriminant(const IntPolynomial& f) const;
  void remember_discriminant(const IntPolynomial& f, const BigInt& disc) const;
  std::optional<QuinticField> from_cache(const std::string& label, const IntPolynomial& f) const;

  FieldOptions options_;
  FieldCache* cache_;
  mutable std::atomic<std::size_t> disc_count_{0};
  mutable std::atomic<std::size_t> cache_hits_{0};
};

}  // namespace quintrank
