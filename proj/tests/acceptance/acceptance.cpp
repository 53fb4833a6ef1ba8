// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <oracles.hpp>

#include "quintrank/cocycle.hpp"
#include "quintrank/fieldscan.hpp"
#include "quintrank/rankgrowth.hpp"
#include "quintrank/standard_rep.hpp"
#include "quintrank/tensor_induction.hpp"

using namespace quintrank;

namespace {

constexpr double kTol = 1e-8;

struct Verdict {
  bool passed = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double time_limit_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.passed = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > time_limit_s) v.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(time_limit_s));
  if (!v.passed) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::cout << "criterion " << n << (v.passed ? " PASS: " : " FAIL: ") << title << " (" << buf
            << (v.detail.empty() ? "" : "; " + v.detail) << ")" << std::endl;
}

std::string run_binary(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + QUINTRANK_BINARY + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

double max_char_deviation(const Character& a, const Character& b) {
  double worst = 0.0;
  for (Element g = 0; g < a.group().order(); ++g) worst = std::max(worst, std::abs(a(g) - b(g)));
  return worst;
}

// Criterion 4 on one instance.
void check_index_two(Verdict& v, const CatalogInstance& inst) {
  const CosetSystem& cs = inst.cosets;
  const FiniteGroup& g = cs.group();
  const Subgroup& q = cs.subgroup();
  const Representation general = tensor_induction(cs, inst.rho);
  const Representation closed = tensor_induction_index2(g, q, inst.theta, inst.rho);
  double closed_dev = 0.0, trace_dev = 0.0;
  const Character chi = inst.rho.character();
  for (Element x = 0; x < g.order(); ++x) {
    closed_dev = std::max(closed_dev, (general(x) - closed(x)).cwiseAbs().maxCoeff());
    if (!q.contains(x))
      trace_dev = std::max(trace_dev, std::abs(general(x).trace() - chi(static_cast<Element>(q.index_of(g.mul(x, x))))));
  }
  const Element q1 = q.elements()[q.order() / 3], q2 = q.elements()[q.order() / 2];
  const CosetSystem other(g, q, {q1, g.mul(q2, inst.theta)});
  const double rep_dev = max_char_deviation(general.character(), tensor_induction(other, inst.rho).character());
  v.require(closed_dev <= kTol, inst.name + ": closed form deviates by " + std::to_string(closed_dev));
  v.require(trace_dev <= kTol, inst.name + ": off-subgroup trace deviates by " + std::to_string(trace_dev));
  v.require(rep_dev <= kTol, inst.name + ": second transversal changes the character by " + std::to_string(rep_dev));
}

}  // namespace

int main() {
  criterion(1, "h2(S4,C2)=2, h2(A4,C2)=1, h1(A5,C2)=0, h1(A4,C2)=0", 60, [] {
    Verdict v;
    const auto s4 = symmetric_group(4);
    const FiniteGroup a4 = induced_group(s4.group, even_subgroup(s4));
    const auto s5 = symmetric_group(5);
    const FiniteGroup a5 = induced_group(s5.group, even_subgroup(s5));
    auto m = [](const FiniteGroup& g) { return CoefficientModule::trivial(g, 1); };
    const int h2s4 = h2_dimension(s4.group, m(s4.group)), h2a4 = h2_dimension(a4, m(a4));
    const int h1a5 = h1_dimension(a5, m(a5)), h1a4 = h1_dimension(a4, m(a4));
    v.require(h2s4 == 2, "h2(S4)=" + std::to_string(h2s4));
    v.require(h2a4 == 1, "h2(A4)=" + std::to_string(h2a4));
    v.require(h1a5 == 0, "h1(A5)=" + std::to_string(h1a5));
    v.require(h1a4 == 0, "h1(A4)=" + std::to_string(h1a4));
    if (v.passed) v.detail = "2, 1, 0, 0";
    return v;
  });

  criterion(2, "Pin cocycle of S5: valid, nonzero on S5 and A5, transposition lifts of order 2", 30, [] {
    Verdict v;
    const PinCover pin = pin_cocycle_sn(5);
    v.require(verify_cocycle(pin.omega), "cocycle identity fails");
    v.require(!coboundary_witness(pin.omega).has_value(), "coboundary witness on S5");
    v.require(!coboundary_witness(pin.omega.restrict_to(even_subgroup(pin.sn))).has_value(), "coboundary witness on A5");
    const CentralExtension e = central_extension(pin.omega);
    v.require(e.group.order() == 240, "extension order " + std::to_string(e.group.order()));
    int lifts = 0, involutive = 0;
    for (Element x = 0; x < pin.sn.group.order(); ++x) {
      const auto& p = pin.sn.elements[x];
      if (p.sign() > 0 || p.fixed_points() != 3) continue;
      for (std::uint32_t c = 0; c < 2; ++c) {
        ++lifts;
        involutive += e.group.element_order(e.lift(c, x)) == 2;
      }
    }
    v.require(lifts == 20 && involutive == 20, std::to_string(involutive) + "/" + std::to_string(lifts) + " lifts of order 2");
    if (v.passed) v.detail = "20/20 transposition lifts of order 2";
    return v;
  });

  criterion(3, "tensor-induced icosian representation is the standard representation of S5", 60, [] {
    Verdict v;
    const StandardRepReport r = verify_standard_rep();
    v.require(r.checks.size() == 4, std::to_string(r.checks.size()) + " checks");
    for (const auto& c : r.checks) v.require(c.passed, c.name + ": expected " + c.expected + ", got " + c.computed);
    if (v.passed) v.detail = std::to_string(r.character_matches) + "/240 character values";
    return v;
  });

  // Built inside the first timed criterion that needs it.
  std::vector<CatalogInstance> catalog;

  criterion(4, "index-2 closed form, off-subgroup traces chi(g^2), transversal independence (1e-8)", 60, [&] {
    Verdict v;
    if (catalog.empty()) catalog = tensor_catalog();
    int instances = 0;
    for (const auto& inst : catalog)
      if (inst.name == "omega5+/2.A5 icosian" || inst.name == "pin 2.S4/2.A4 hurwitz twist 0") {
        check_index_two(v, inst);
        ++instances;
      }
    v.require(instances == 2, "catalog instances missing");
    if (v.passed) v.detail = "Omega5+ and 2.S4/2.A4";
    return v;
  });

  criterion(5, "reducibility criterion agrees with <chi,chi> >= 2 on every catalog instance", 60, [&] {
    Verdict v;
    if (catalog.empty()) catalog = tensor_catalog();
    int reducible = 0;
    for (const auto& inst : catalog) {
      const TensorCriterion tc = tensor_criterion(inst.cosets, inst.theta, inst.rho);
      v.require(tc.criterion_holds == (tc.profile.selfnorm >= 2), inst.name + ": criterion and selfnorm disagree");
      if (tc.profile.selfnorm >= 2) {
        ++reducible;
        v.require(tc.profile.type == DecompositionType::ThreePlusOne && tc.profile.linear_constituents() == 1,
                  inst.name + ": reducible but not of type (3,1)");
      }
    }
    if (v.passed) v.detail = std::to_string(catalog.size()) + " instances, " + std::to_string(reducible) + " reducible";
    return v;
  });

  criterion(6, "Kronecker symbols, discriminants and real root counts against independent oracles", 120, [] {
    Verdict v;
    std::size_t kron = 0, kron_bad = 0;
    for (std::uint32_t p : primes_up_to(500)) {
      if (p == 2) continue;
      for (long a = -500; a <= 500; ++a, ++kron)
        kron_bad += kronecker_symbol(BigInt(a), BigInt(p)) != oracle::legendre_by_residues(BigInt(a), p);
    }
    v.require(kron_bad == 0, std::to_string(kron_bad) + " Kronecker mismatches");
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> coef(-50, 50);
    std::size_t disc_bad = 0, roots_bad = 0, roots_checked = 0, polys = 0;
    while (polys < 1000) {
      std::vector<BigInt> desc;
      for (int i = 0; i < 6; ++i) desc.emplace_back(coef(rng));
      if (desc[0] == 0) continue;
      ++polys;
      const IntPolynomial f = IntPolynomial::from_descending(desc);
      const BigInt d = poly_discriminant(f);
      disc_bad += d != oracle::sylvester_discriminant(desc);
      if (d == 0) continue;
      ++roots_checked;
      roots_bad += real_root_count(f) != oracle::bisection_real_roots(desc);
    }
    v.require(disc_bad == 0, std::to_string(disc_bad) + " discriminant mismatches");
    v.require(roots_bad == 0, std::to_string(roots_bad) + " real root mismatches");
    const BigInt brumer = poly_discriminant(IntPolynomial::from_descending({1, 0, 0, 0, -1, -1}));
    v.require(brumer == 2869, "disc(x^5-x-1)=" + brumer.get_str());
    if (v.passed)
      v.detail = std::to_string(kron) + " symbols, " + std::to_string(polys) + " discriminants, " +
                 std::to_string(roots_checked) + " root counts, disc(x^5-x-1)=2869";
    return v;
  });

  criterion(7, "(37a, x^5-x-1) is admissible and its parity is the sign of (2869|37)", 30, [] {
    Verdict v;
    const QuinticField f = FieldBuilder().build("x^5-x-1", IntPolynomial::from_descending({1, 0, 0, 0, -1, -1}));
    const ParityCertificate c = certify(CurveData::parse("37a 37 37"), f);
    for (const auto& chk : c.checks)
      std::cout << "  check " << chk.name << ": " << (chk.passed ? "pass" : "fail") << " (" << chk.detail << ")\n";
    v.require(c.admissible, "not admissible");
    const int k = kronecker_symbol(BigInt(2869), BigInt(37));
    const int residues = oracle::legendre_by_residues(BigInt(2869), 37);
    v.require(k == residues, "Kronecker symbol disagrees with residue enumeration");
    v.require(c.chi == k, "chi=" + std::to_string(c.chi));
    v.require(c.parity == (k == -1 ? Parity::Odd : Parity::Even), "parity does not follow the symbol");
    if (v.passed) v.detail = "(2869|37)=" + std::to_string(k) + ", parity " + to_string(*c.parity);
    return v;
  });

  criterion(8, "det(rho) o transfer is trivial on Omega5+ and the transfer ignores the transversal", 60, [] {
    Verdict v;
    const PinDoubleCover cover = pin_double_cover(5);
    const Representation rho = quaternion_model(cover, icosian_group());
    const double dev = det_transfer_deviation(cover.cosets, rho);
    v.require(dev <= kTol, "det o transfer deviates by " + std::to_string(dev));
    const TransferMap base(cover.cosets);
    v.require(base.is_homomorphism(), "transfer is not a homomorphism");
    const auto& q = cover.even.elements();
    std::size_t transversals = 0;
    for (std::size_t i = 1; i < q.size(); i += 17) {
      const CosetSystem other(cover.ext.group, cover.even,
                              {cover.ext.group.mul(q[i], cover.theta), q[(i * 5) % q.size()]});
      const TransferMap t(other);
      for (Element x = 0; x < cover.ext.group.order(); ++x)
        if (t.value(x) != base.value(x)) {
          v.require(false, "transfer changes with the transversal at element " + std::to_string(x));
          break;
        }
      v.require(det_transfer_deviation(other, rho) <= kTol, "det o transfer depends on the transversal");
      ++transversals;
    }
    if (v.passed) v.detail = std::to_string(transversals) + " alternative transversals";
    return v;
  });

  criterion(9, "height-6 enumeration for 37a: >=200 admissible per bucket, odd share in [0.35,0.65], monotone", 600,
            [] {
              Verdict v;
              EnumerationOptions opt;
              opt.height = 6;
              opt.disc_bound = 200'000;
              const FieldBuilder builder;
              const EnumerationResult r = enumerate_quintics(opt, builder);
              std::vector<BigInt> edges;
              for (long x = 40'000; x <= 200'000; x += 40'000) edges.emplace_back(x);
              const ScanReport rep = scan(CurveData::parse("37a 37 37"), r.fields, edges);
              std::cout << "  " << r.fields.size() << " fields from " << r.stats.polynomials << " polynomials, "
                        << r.stats.audit_failures.size() << " audit failures\n";
              const ScanBucket* prev = nullptr;
              for (const auto& b : rep.buckets) {
                std::cout << "  X=" << b.x.get_str() << " total=" << b.total << " admissible=" << b.admissible
                          << " odd=" << b.odd << "\n";
                const std::string at = " at X=" + b.x.get_str();
                v.require(b.admissible >= 200, "only " + std::to_string(b.admissible) + " admissible" + at);
                if (b.admissible > 0) {
                  const double share = static_cast<double>(b.odd) / b.admissible;
                  v.require(share >= 0.35 && share <= 0.65, "odd share " + std::to_string(share) + at);
                }
                if (b.admissible >= 50) v.require(b.odd > 0, "no odd fields" + at);
                if (prev)
                  v.require(prev->total <= b.total && prev->admissible <= b.admissible && prev->odd <= b.odd,
                            "counts decrease" + at);
                prev = &b;
              }
              if (v.passed)
                v.detail = std::to_string(rep.buckets.back().admissible) + " admissible, " +
                           std::to_string(rep.buckets.back().odd) + " odd at X=200000";
              return v;
            });

  criterion(10, "selftest and a fixed scan are byte-identical across two runs", 120, [] {
    Verdict v;
    for (const std::string args : {std::string("selftest"),
                                   std::string("--json scan --curve \"37a 37 37\" --height 2 --buckets 10000,50000")}) {
      int s1 = 0, s2 = 0;
      const std::string a = run_binary(args, s1);
      const std::string b = run_binary(args, s2);
      v.require(s1 == 0 && s2 == 0, "`" + args + "` exited with a nonzero status");
      v.require(!a.empty(), "`" + args + "` printed nothing");
      v.require(a == b, "`" + args + "` output differs between runs");
    }
    return v;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
