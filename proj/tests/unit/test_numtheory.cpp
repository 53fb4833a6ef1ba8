#include <doctest.h>

#include <random>

#include <oracles.hpp>

#include "quintrank/galois.hpp"
#include "quintrank/poly_modp.hpp"
#include "quintrank/polynomial.hpp"

using namespace quintrank;

namespace {

std::vector<std::vector<BigInt>> random_quintics(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::vector<std::vector<BigInt>> out;
  while (out.size() < count) {
    std::vector<BigInt> desc;
    for (int i = 0; i < 6; ++i) desc.emplace_back(coef(rng));
    if (desc[0] == 0) continue;
    out.push_back(desc);
  }
  return out;
}

const IntPolynomial kBrumer = IntPolynomial::from_descending({1, 0, 0, 0, -1, -1});

}  // namespace

TEST_CASE("Kronecker symbol against quadratic residues") {
  for (std::uint32_t p : primes_up_to(500)) {
    if (p == 2) continue;
    for (long a = -500; a <= 500; ++a)
      REQUIRE(kronecker_symbol(BigInt(a), BigInt(p)) == oracle::legendre_by_residues(BigInt(a), p));
  }
  for (unsigned long n = 3; n < 400; n += 2)
    for (long a = -60; a <= 60; ++a)
      REQUIRE(kronecker_symbol(BigInt(a), BigInt(n)) == oracle::jacobi_by_residues(BigInt(a), n));
}

TEST_CASE("Kronecker symbol at 2, -1 and 0") {
  for (long a = -40; a <= 40; ++a) {
    const long r = ((a % 8) + 8) % 8;
    const int at2 = a % 2 == 0 ? 0 : (r == 1 || r == 7 ? 1 : -1);
    CHECK(kronecker_symbol(BigInt(a), BigInt(2)) == at2);
    CHECK(kronecker_symbol(BigInt(a), BigInt(-1)) == (a < 0 ? -1 : 1));
    CHECK(kronecker_symbol(BigInt(a), BigInt(0)) == (a == 1 || a == -1 ? 1 : 0));
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-3000, 3000);
  for (int i = 0; i < 2000; ++i) {
    const BigInt a(d(rng)), m(d(rng)), n(d(rng));
    REQUIRE(kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n));
  }
  CHECK(kronecker_symbol(BigInt(2869), BigInt(37)) == -1);
}

TEST_CASE("discriminants against the Sylvester determinant") {
  int nonzero = 0;
  for (const auto& desc : random_quintics(1000, 12345)) {
    const BigInt expect = oracle::sylvester_discriminant(desc);
    REQUIRE(poly_discriminant(IntPolynomial::from_descending(desc)) == expect);
    nonzero += expect != 0;
  }
  CHECK(nonzero > 990);
  CHECK(poly_discriminant(kBrumer) == 2869);
  CHECK(poly_discriminant(IntPolynomial::from_descending({1, 0, 0, 0, 0, -2})) == 50000);
  for (long a : {-3L, 1L, 7L})
    for (long b : {-5L, 0L, 4L})
      for (long c : {-2L, 9L}) {
        const BigInt disc = poly_discriminant(IntPolynomial::from_descending({a, b, c}));
        CHECK(disc == BigInt(b * b - 4 * a * c));
      }
  CHECK(poly_discriminant(IntPolynomial::from_descending({1, -2, 1})) == 0);
}

TEST_CASE("real root counts against bisection") {
  std::map<int, int> histogram;
  for (const auto& desc : random_quintics(1000, 12345)) {
    const IntPolynomial f = IntPolynomial::from_descending(desc);
    if (poly_discriminant(f) == 0) {
      CHECK_THROWS_AS(real_root_count(f), NotSquarefree);
      continue;
    }
    const int r = real_root_count(f);
    REQUIRE(r == oracle::bisection_real_roots(desc));
    ++histogram[r];
  }
  CHECK(histogram.count(1) == 1);
  CHECK(histogram.count(3) == 1);
  CHECK(histogram.count(5) == 1);
  CHECK(real_root_count(kBrumer) == 1);
  CHECK(real_root_count(IntPolynomial::from_descending({1, 0, -5, 0, 4, 0})) == 5);
}

TEST_CASE("square-free kernel") {
  auto sk = [](long long n) { return squarefree_kernel(BigInt(std::to_string(n))); };
  CHECK(sk(2869).kernel == 2869);
  CHECK(sk(2869).complete);
  CHECK(sk(4).kernel == 1);
  CHECK(sk(18).kernel == 2);
  CHECK(sk(-12).kernel == -3);
  CHECK(sk(-1).kernel == -1);
  CHECK(sk(50000).kernel == 5);
  const BigInt p(1000003), q(1000033);
  const SquarefreeKernel big_square = squarefree_kernel(p * p * 3);
  CHECK(big_square.kernel == 3);
  CHECK(big_square.complete);
  const SquarefreeKernel big_prime = squarefree_kernel(p * 12);
  CHECK(big_prime.kernel == p * 3);
  CHECK(big_prime.complete);
  const SquarefreeKernel unknown = squarefree_kernel(p * q);
  CHECK_FALSE(unknown.complete);
  CHECK(unknown.kernel == p * q);
}

TEST_CASE("factor patterns mod p") {
  // Linear factors are roots in F_p.
  int checked = 0;
  for (const auto& desc : random_quintics(200, 99)) {
    const IntPolynomial f = IntPolynomial::from_descending(desc);
    for (std::uint32_t p : {3u, 7u, 13u, 31u, 101u}) {
      if (mpz_divisible_ui_p(desc[0].get_mpz_t(), p)) {
        CHECK_THROWS_AS(factor_pattern_mod_p(f, p), LeadingCoeffVanishes);
        continue;
      }
      const FactorPattern pat = factor_pattern_mod_p(f, p);
      if (!pat.squarefree) continue;
      int sum = 0, linear = 0;
      for (int d : pat.degrees) {
        sum += d;
        linear += d == 1;
      }
      REQUIRE(sum == 5);
      REQUIRE(std::is_sorted(pat.degrees.begin(), pat.degrees.end()));
      REQUIRE(linear == oracle::roots_mod_p(desc, p));
      ++checked;
    }
  }
  CHECK(checked > 800);

  // x^5 - 2 for p = 2, 3 mod 5 splits as 1 + 4 and for p = 4 mod 5 as 1 + 2 + 2,
  // since x -> x^5 is then a bijection of F_p and the other roots lie in F_(p^ord(p mod 5)).
  const IntPolynomial f = IntPolynomial::from_descending({1, 0, 0, 0, 0, -2});
  for (std::uint32_t p : primes_up_to(400)) {
    if (p == 2 || p == 5 || p % 5 == 1) continue;
    const FactorPattern pat = factor_pattern_mod_p(f, p);
    REQUIRE(pat.squarefree);
    CHECK(pat.degrees == (p % 5 == 4 ? std::vector<int>{1, 2, 2} : std::vector<int>{1, 4}));
  }
  CHECK_FALSE(factor_pattern_mod_p(kBrumer, 19).squarefree);
  CHECK(factor_pattern_mod_p(kBrumer, 3).degrees == std::vector<int>{5});
  CHECK_THROWS_AS(factor_pattern_mod_p(IntPolynomial::from_descending({1, 0, 0, 0, 0, 0, 0, 0, 1}), 7),
                  std::invalid_argument);
}

TEST_CASE("S5 certificates") {
  const S5Certificate brumer = certify_s5(kBrumer);
  CHECK(brumer.status == S5Status::Certified);
  REQUIRE(brumer.five_cycle_prime.has_value());
  REQUIRE(brumer.transposition_prime.has_value());
  CHECK(factor_pattern_mod_p(kBrumer, *brumer.five_cycle_prime).degrees == std::vector<int>{5});
  CHECK(factor_pattern_mod_p(kBrumer, *brumer.transposition_prime).degrees == std::vector<int>{1, 1, 1, 2});

  const S5Certificate frobenius = certify_s5(IntPolynomial::from_descending({1, 0, 0, 0, 0, -2}));
  CHECK(frobenius.status == S5Status::Inconclusive);
  CHECK_FALSE(frobenius.transposition_prime.has_value());
  CHECK(frobenius.primes_scanned == kDefaultPrimeBudget);

  const IntPolynomial reducible =
      IntPolynomial::from_descending({1, -1}) * IntPolynomial::from_descending({1, 0, 0, 0, 1});
  const S5Certificate red = certify_s5(reducible);
  CHECK(red.status == S5Status::Inconclusive);
  CHECK(red.primes_scanned == 0);

  // Integer root with a non-square discriminant.
  const IntPolynomial with_root =
      IntPolynomial::from_descending({1, -3}) * IntPolynomial::from_descending({1, 0, 0, -1, -1});
  CHECK(certify_s5(with_root).primes_scanned == 0);
  CHECK(certify_s5(kBrumer, 1).status == S5Status::Inconclusive);
}

TEST_CASE("Frobenius 5-cycles have density about one fifth") {
  int five = 0, total = 0;
  for (std::uint32_t p : small_primes()) {
    if (total == 500) break;
    if (2869 % p == 0) continue;
    ++total;
    five += factor_pattern_mod_p(kBrumer, p).degrees == std::vector<int>{5};
  }
  const double density = static_cast<double>(five) / total;
  CHECK(density >= 0.1);
  CHECK(density <= 0.3);
}

TEST_CASE("quadratic resolvent") {
  const ResolventData brumer = resolvent(kBrumer);
  CHECK(brumer.squarefree_kernel == 2869);
  CHECK(brumer.fundamental_disc == 2869);
  CHECK(brumer.complete);
  CHECK_FALSE(brumer.degenerate);
  CHECK(resolvent_from_disc(BigInt(-12)).fundamental_disc == -3);
  CHECK(resolvent_from_disc(BigInt(8)).fundamental_disc == 8);
  CHECK(resolvent_from_disc(BigInt(-4)).fundamental_disc == -4);
  CHECK(resolvent_from_disc(BigInt(3381)).fundamental_disc == 69);
  CHECK(resolvent_from_disc(BigInt(7 * 25)).fundamental_disc == 28);

  const IntPolynomial square_disc = IntPolynomial::from_descending({1, -2, -2, 3, 1, -1});
  CHECK(poly_discriminant(square_disc) == 196);
  const ResolventData deg = resolvent(square_disc);
  CHECK(deg.degenerate);
  CHECK(deg.squarefree_kernel == 1);
}

TEST_CASE("primes in the resolvent field") {
  const ResolventData rd = resolvent(kBrumer);
  CHECK(splitting_in_resolvent(BigInt(3), rd) == Splitting::Split);
  CHECK(splitting_in_resolvent(BigInt(37), rd) == Splitting::Inert);
  CHECK(splitting_in_resolvent(BigInt(19), rd) == Splitting::Ramified);
  CHECK(splitting_in_resolvent(BigInt(151), rd) == Splitting::Ramified);
  CHECK(splitting_in_resolvent(BigInt(2), resolvent_from_disc(BigInt(5))) == Splitting::Inert);
  CHECK(splitting_in_resolvent(BigInt(2), resolvent_from_disc(BigInt(8))) == Splitting::Ramified);
  ResolventData incomplete = rd;
  incomplete.complete = false;
  CHECK_THROWS_AS(splitting_in_resolvent(BigInt(3), incomplete), IncompleteData);
}

TEST_CASE("primality and sieving") {
  CHECK_FALSE(is_probable_prime(BigInt(561)));
  CHECK(is_probable_prime(BigInt("2305843009213693951")));
  CHECK_FALSE(is_probable_prime(BigInt("3215031751")));
  for (long n = -5; n < 20000; ++n)
    REQUIRE(is_probable_prime(BigInt(n)) == (n > 1 && mpz_probab_prime_p(BigInt(n).get_mpz_t(), 30) > 0));
  CHECK(primes_up_to(100).size() == 25);
  CHECK(small_primes().back() == 999983u);
  CHECK(first_primes(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  const TrialFactorization tf = trial_factor(BigInt(-360));
  CHECK(tf.complete);
  CHECK(tf.factors.size() == 3);
  CHECK(tf.factors[0] == std::make_pair(BigInt(2), 3u));
}
