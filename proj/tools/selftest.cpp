#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quintrank/cocycle.hpp"
#include "quintrank/cosets.hpp"
#include "quintrank/polynomial.hpp"
#include "quintrank/quintic_field.hpp"
#include "quintrank/rankgrowth.hpp"
#include "quintrank/standard_rep.hpp"
#include "quintrank/tensor_induction.hpp"

namespace quintrank::cli {

namespace {

SelfCheck cohomology_table() {
  const auto s4 = symmetric_group(4);
  const FiniteGroup a4 = induced_group(s4.group, even_subgroup(s4));
  const auto s5 = symmetric_group(5);
  const FiniteGroup a5 = induced_group(s5.group, even_subgroup(s5));
  const int h2_s4 = h2_dimension(s4.group, CoefficientModule::trivial(s4.group, 1));
  const int h2_a4 = h2_dimension(a4, CoefficientModule::trivial(a4, 1));
  const int h1_a4 = h1_dimension(a4, CoefficientModule::trivial(a4, 1));
  const int h1_a5 = h1_dimension(a5, CoefficientModule::trivial(a5, 1));
  std::ostringstream d;
  d << "h2(S4)=" << h2_s4 << " h2(A4)=" << h2_a4 << " h1(A4)=" << h1_a4 << " h1(A5)=" << h1_a5;
  return {"cohomology table", h2_s4 == 2 && h2_a4 == 1 && h1_a4 == 0 && h1_a5 == 0, d.str()};
}

SelfCheck pin_cocycle() {
  const PinCover pin = pin_cocycle_sn(5);
  const bool valid = verify_cocycle(pin.omega);
  const bool s5_nonzero = !coboundary_witness(pin.omega);
  const bool a5_nonzero = !coboundary_witness(pin.omega.restrict_to(even_subgroup(pin.sn)));
  const CentralExtension ext = central_extension(pin.omega);
  std::size_t lifts = 0, involutions = 0;
  for (Element g = 0; g < pin.sn.group.order(); ++g) {
    if (pin.sn.elements[g].cycle_type() != std::vector<int>{1, 1, 1, 2}) continue;
    for (std::uint32_t c = 0; c < ext.modulus; ++c) {
      ++lifts;
      if (ext.group.element_order(ext.lift(c, g)) == 2) ++involutions;
    }
  }
  std::ostringstream d;
  d << "cocycle " << (valid ? "valid" : "invalid") << ", class on S5 " << (s5_nonzero ? "nonzero" : "zero")
    << ", on A5 " << (a5_nonzero ? "nonzero" : "zero") << ", extension order " << ext.group.order() << ", "
    << involutions << "/" << lifts << " transposition lifts of order 2";
  return {"pin cocycle", valid && s5_nonzero && a5_nonzero && ext.group.order() == 240 && lifts == 20 &&
                             involutions == lifts,
          d.str()};
}

SelfCheck standard_rep() {
  const StandardRepReport r = verify_standard_rep();
  std::ostringstream d;
  d << r.character_matches << "/" << r.group_order << " character values match";
  for (const auto& c : r.checks)
    if (!c.passed) d << "; failed: " << c.name;
  return {"standard representation", r.passed(), d.str()};
}

double max_deviation(const Representation& a, const Representation& b) {
  double worst = 0.0;
  for (Element g = 0; g < a.group().order(); ++g) worst = std::max(worst, (a(g) - b(g)).cwiseAbs().maxCoeff());
  return worst;
}

SelfCheck tensor_identities(const std::vector<CatalogInstance>& catalog) {
  const CatalogInstance& omega = catalog.front();
  const Representation general = tensor_induction(omega.cosets, omega.rho);
  const Representation closed = tensor_induction_index2(omega.cosets.group(), omega.cosets.subgroup(),
                                                        omega.theta, omega.rho);
  const double dev = max_deviation(general, closed);
  std::ostringstream d;
  d << "closed form deviation " << (dev <= kMatrixTolerance ? "within" : "beyond") << " 1e-8 on " << omega.name;
  return {"index-2 closed form", dev <= kMatrixTolerance, d.str()};
}

SelfCheck criterion(const std::vector<CatalogInstance>& catalog) {
  std::size_t agree = 0, reducible = 0;
  bool types_ok = true;
  for (const auto& inst : catalog) {
    const TensorCriterion tc = tensor_criterion(inst.cosets, inst.theta, inst.rho);
    if (tc.consistent()) ++agree;
    if (tc.reducible) {
      ++reducible;
      types_ok = types_ok && tc.profile.linear_constituents() == 1 && tc.profile.type == DecompositionType::ThreePlusOne;
    }
  }
  std::ostringstream d;
  d << agree << "/" << catalog.size() << " instances agree, " << reducible << " reducible of type (3,1)";
  return {"reducibility criterion", agree == catalog.size() && types_ok, d.str()};
}

SelfCheck transfer(const std::vector<CatalogInstance>& catalog) {
  const CatalogInstance& omega = catalog.front();
  const double dev = det_transfer_deviation(omega.cosets, omega.rho);
  const TransferMap v(omega.cosets);
  std::ostringstream d;
  d << "det o transfer " << (dev <= kMatrixTolerance ? "trivial" : "nontrivial") << ", transfer "
    << (v.is_homomorphism() ? "is" : "is not") << " a homomorphism";
  return {"transfer", dev <= kMatrixTolerance && v.is_homomorphism(), d.str()};
}

SelfCheck polynomials() {
  const auto f = IntPolynomial::from_descending({1, 0, 0, 0, -1, -1});
  const BigInt disc = poly_discriminant(f);
  const BigInt disc_x5m1 = poly_discriminant(IntPolynomial::from_descending({1, 0, 0, 0, 0, -1}));
  const int roots = real_root_count(f);
  const int roots_x5m4x = real_root_count(IntPolynomial::from_descending({1, 0, 0, 0, -4, 0}));
  std::ostringstream d;
  d << "disc(x^5-x-1)=" << disc << " disc(x^5-1)=" << disc_x5m1 << " roots " << roots << " and " << roots_x5m4x;
  return {"discriminants and real roots", disc == 2869 && disc_x5m1 == 3125 && roots == 1 && roots_x5m4x == 3,
          d.str()};
}

SelfCheck kronecker() {
  std::size_t compared = 0, mismatches = 0;
  for (std::uint32_t p : primes_up_to(200)) {
    if (p == 2) continue;
    std::vector<char> square(p, 0);
    for (std::uint32_t x = 1; x < p; ++x) square[x * x % p] = 1;
    for (long a = -60; a <= 60; ++a) {
      const long r = ((a % static_cast<long>(p)) + p) % p;
      const int expected = r == 0 ? 0 : (square[static_cast<std::size_t>(r)] ? 1 : -1);
      ++compared;
      if (kronecker_symbol(BigInt(a), BigInt(p)) != expected) ++mismatches;
    }
  }
  std::ostringstream d;
  d << mismatches << " mismatches in " << compared << " residue comparisons";
  return {"kronecker symbol", mismatches == 0, d.str()};
}

SelfCheck parity_37() {
  const CurveData curve = CurveData::parse("37a 37 37^1");
  const QuinticField field = FieldBuilder().build("x^5-x-1", IntPolynomial::from_descending({1, 0, 0, 0, -1, -1}));
  const ParityCertificate c = certify(curve, field);
  return {"parity certificate", c.admissible && c.chi == -1 && c.parity == Parity::Odd, c.to_json()};
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
  std::vector<SelfCheck> out;
  out.push_back(cohomology_table());
  out.push_back(pin_cocycle());
  out.push_back(standard_rep());
  const auto catalog = tensor_catalog();
  out.push_back(tensor_identities(catalog));
  out.push_back(criterion(catalog));
  out.push_back(transfer(catalog));
  out.push_back(polynomials());
  out.push_back(kronecker());
  out.push_back(parity_37());
  return out;
}

}  // namespace quintrank::cli
