#include "quintrank/arith.hpp"

#include <stdexcept>

namespace quintrank {

namespace {

// Jacobi symbol (a | n) for odd n > 0 by the binary algorithm.
int jacobi(BigInt a, BigInt n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    const auto z = mpz_scan1(a.get_mpz_t(), 0);
    if (z > 0) {
      mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), z);
      const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if ((z & 1) && (r == 3 || r == 5)) t = -t;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker_symbol(const BigInt& a, const BigInt& n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int t = 1;
  BigInt m = n;
  if (m < 0) {
    m = -m;
    if (a < 0) t = -t;
  }
  const auto v = mpz_scan1(m.get_mpz_t(), 0);
  if (v > 0) {
    if (mpz_even_p(a.get_mpz_t())) return 0;
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), v);
    const unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), 8);
    if ((v & 1) && (r == 3 || r == 5)) t = -t;
  }
  if (m == 1) return t;
  return t * jacobi(a, m);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return out;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(1'000'000);
  return primes;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  const auto& sp = small_primes();
  if (count > sp.size()) throw std::out_of_range("first_primes: count exceeds the sieve");
  return {sp.begin(), sp.begin() + static_cast<std::ptrdiff_t>(count)};
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt nm1 = n - 1;
  BigInt x;
  for (unsigned base : kBases) {
    const BigInt b = base;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s && witness; ++r) {
      x = x * x % n;
      if (x == nm1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

TrialFactorization trial_factor(const BigInt& n, std::uint32_t bound) {
  if (n == 0) throw std::invalid_argument("trial_factor: zero has no factorization");
  TrialFactorization out;
  BigInt m = abs(n);
  const auto& sp = small_primes();
  for (std::uint32_t p : sp) {
    if (p > bound) break;
    if (BigInt(p) * p > m) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    out.factors.emplace_back(BigInt(p), e);
  }
  if (m == 1) {
    out.cofactor = 1;
    out.complete = true;
  } else if (is_probable_prime(m)) {
    out.factors.emplace_back(m, 1);
    out.cofactor = 1;
    out.complete = true;
  } else {
    out.cofactor = m;
  }
  return out;
}

SquarefreeKernel squarefree_kernel(const BigInt& n, std::uint32_t bound) {
  const TrialFactorization tf = trial_factor(n, bound);
  SquarefreeKernel out;
  out.kernel = sgn(n);
  for (const auto& [p, e] : tf.factors)
    if (e % 2) out.kernel *= p;
  out.complete = tf.complete;
  // A square cofactor contributes nothing to the kernel whatever its factors.
  if (!tf.complete) {
    if (mpz_perfect_square_p(tf.cofactor.get_mpz_t()))
      out.complete = true;
    else
      out.kernel *= tf.cofactor;
  }
  return out;
}

}  // namespace quintrank
