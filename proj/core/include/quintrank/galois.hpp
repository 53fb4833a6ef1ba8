#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/poly_modp.hpp"
#include "quintrank/polynomial.hpp"

namespace quintrank {

inline constexpr std::size_t kDefaultPrimeBudget = 200;

enum class S5Status { Certified, Inconclusive };
std::string to_string(S5Status s);

struct S5Certificate {
  S5Status status = S5Status::Inconclusive;
  /// p not dividing disc with f irreducible mod p (a 5-cycle Frobenius).
  std::optional<std::uint64_t> five_cycle_prime;
  /// q not dividing disc with pattern {1,1,1,2} (a transposition Frobenius).
  std::optional<std::uint64_t> transposition_prime;
  std::size_t primes_scanned = 0;
};

/// Scans the first `prime_budget` primes for a 5-cycle witness and a
/// transposition witness among primes not dividing disc. A transitive group of
/// degree 5 containing a transposition is S_5, so Certified is never wrong;
/// Inconclusive just means the scan found no proof. A square discriminant or
/// a small integer root rules out S_5 and returns Inconclusive unscanned.
S5Certificate certify_s5(const IntPolynomial& f, const BigInt& disc, std::size_t prime_budget = kDefaultPrimeBudget);
S5Certificate certify_s5(const IntPolynomial& f, std::size_t prime_budget = kDefaultPrimeBudget);

class IncompleteData : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Quadratic resolvent L = Q(sqrt(disc f)).
struct ResolventData {
  BigInt disc;
  BigInt squarefree_kernel;  // D, signed
  BigInt fundamental_disc;   // D if D = 1 mod 4, else 4D
  bool complete = false;     // kernel computed from a complete factorization
  bool degenerate = false;   // D == 1: disc is a square and L = Q
};

ResolventData resolvent(const IntPolynomial& f);
ResolventData resolvent_from_disc(const BigInt& disc);

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

/// Behaviour of p in L from the Kronecker symbol (fundamental_disc | p).
/// Throws IncompleteData if the resolvent data is incomplete.
Splitting splitting_in_resolvent(const BigInt& p, const ResolventData& rd);

}  // namespace quintrank
