#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quintrank {

using BigInt = mpz_class;

/// Kronecker symbol (a | n) for arbitrary integers, with (a | 2) read from
/// a mod 8, (a | -1) = sign of a, and (a | 0) = 1 iff a = +-1.
int kronecker_symbol(const BigInt& a, const BigInt& n);

/// All primes <= limit (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);
/// Primes below 10^6, computed once.
const std::vector<std::uint32_t>& small_primes();
/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Miller-Rabin with the twelve prime bases 2..37, which is deterministic
/// below 3.3 * 10^24 and a strong probable-prime test above.
bool is_probable_prime(const BigInt& n);

struct TrialFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  BigInt cofactor;  // |n| with the listed factors removed
  bool complete = false;  // cofactor is 1 or a probable prime (then listed)
};

/// Trial division of |n| by primes <= bound. If the remaining cofactor is a
/// probable prime it is appended to `factors`.
TrialFactorization trial_factor(const BigInt& n, std::uint32_t bound = 1'000'000);

struct SquarefreeKernel {
  BigInt kernel;  // carries the sign of n
  bool complete = false;
};

/// sign(n) * prod of the primes dividing n to an odd power, from trial
/// division up to `bound`. An unfactored cofactor that is neither a probable
/// prime nor a perfect square is kept in the kernel and reported as
/// incomplete.
SquarefreeKernel squarefree_kernel(const BigInt& n, std::uint32_t bound = 1'000'000);

}  // namespace quintrank
