#include "quintrank/galois.hpp"

#include "quintrank/arith.hpp"

namespace quintrank {

std::string to_string(S5Status s) { return s == S5Status::Certified ? "Certified" : "Inconclusive"; }

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "Split";
    case Splitting::Inert: return "Inert";
    case Splitting::Ramified: return "Ramified";
  }
  return "Ramified";
}

namespace {

// An integer root r divides a0 and satisfies |r| <= 1 + max |a_i / a_5|; only
// small candidates are tried.
bool has_small_integer_root(const IntPolynomial& f) {
  const BigInt& a0 = f.coeff(0);
  if (a0 == 0) return true;
  BigInt bound = 0;
  for (int i = 0; i < f.degree(); ++i) bound = std::max<BigInt>(bound, abs(f.coeff(i)));
  bound = bound / abs(f.lead()) + 1;
  if (bound > abs(a0)) bound = abs(a0);
  const long limit = bound > 1000 ? 1000 : bound.get_si();
  for (long r = 1; r <= limit; ++r) {
    if (!mpz_divisible_ui_p(a0.get_mpz_t(), static_cast<unsigned long>(r))) continue;
    if (f(BigInt(r)) == 0 || f(BigInt(-r)) == 0) return true;
  }
  return false;
}

}  // namespace

S5Certificate certify_s5(const IntPolynomial& f, const BigInt& disc, std::size_t prime_budget) {
  if (f.degree() != 5) throw std::invalid_argument("certify_s5: polynomial must have degree 5");
  if (disc == 0) throw std::invalid_argument("certify_s5: polynomial is not separable");
  S5Certificate cert;
  // Square discriminant: Galois group inside A5, no transposition exists.
  // Integer root: reducible, no 5-cycle exists.
  if (disc > 0 && mpz_perfect_square_p(disc.get_mpz_t())) return cert;
  if (has_small_integer_root(f)) return cert;
  const std::vector<int> five{5}, transposition{1, 1, 1, 2};
  for (std::uint64_t p : first_primes(prime_budget)) {
    ++cert.primes_scanned;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p) || mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
    const FactorPattern pat = factor_pattern_mod_p(f, p);
    if (!pat.squarefree) continue;
    if (!cert.five_cycle_prime && pat.degrees == five) cert.five_cycle_prime = p;
    if (!cert.transposition_prime && pat.degrees == transposition) cert.transposition_prime = p;
    if (cert.five_cycle_prime && cert.transposition_prime) {
      cert.status = S5Status::Certified;
      break;
    }
  }
  return cert;
}

S5Certificate certify_s5(const IntPolynomial& f, std::size_t prime_budget) {
  return certify_s5(f, poly_discriminant(f), prime_budget);
}

ResolventData resolvent_from_disc(const BigInt& disc) {
  if (disc == 0) throw std::invalid_argument("resolvent: zero discriminant");
  ResolventData rd;
  rd.disc = disc;
  const SquarefreeKernel k = squarefree_kernel(disc);
  rd.squarefree_kernel = k.kernel;
  rd.complete = k.complete;
  rd.fundamental_disc = mpz_fdiv_ui(k.kernel.get_mpz_t(), 4) == 1 ? k.kernel : BigInt(4 * k.kernel);
  rd.degenerate = k.kernel == 1;
  return rd;
}

ResolventData resolvent(const IntPolynomial& f) { return resolvent_from_disc(poly_discriminant(f)); }

Splitting splitting_in_resolvent(const BigInt& p, const ResolventData& rd) {
  if (!rd.complete) throw IncompleteData("splitting_in_resolvent: discriminant kernel is incomplete");
  switch (kronecker_symbol(rd.fundamental_disc, p)) {
    case 1: return Splitting::Split;
    case -1: return Splitting::Inert;
    default: return Splitting::Ramified;
  }
}

}  // namespace quintrank
