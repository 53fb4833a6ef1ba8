#include "quintrank/standard_rep.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "quintrank/isomorphism.hpp"

namespace quintrank {

PinDoubleCover pin_double_cover(int n) {
  PinCover pin = pin_cocycle_sn(n);
  CentralExtension ext = central_extension(pin.omega);
  const Subgroup an = even_subgroup(pin.sn);
  Subgroup even = preimage(ext.group, ext.projection, an);
  FiniteGroup even_group = induced_group(ext.group, even);
  const auto t01 = find_label(pin.sn, Permutation::transposition(n, 0, 1));
  if (!t01) throw std::logic_error("pin_double_cover: (0 1) missing from S_n");
  const Element theta = ext.lift(0, *t01);
  CosetSystem cosets(ext.group, even, {0, theta});
  return {std::move(pin), std::move(ext), std::move(even), std::move(even_group), theta, std::move(cosets)};
}

Representation quaternion_model(const PinDoubleCover& cover, const QuaternionGroup& model) {
  const auto phi = find_isomorphism(cover.even_group, model.group);
  if (!phi) throw std::runtime_error("quaternion_model: preimage of A_n is not isomorphic to the model group");
  return model.rep.pullback(cover.even_group, *phi);
}

double det_transfer_deviation(const CosetSystem& cs, const Representation& rho) {
  const Subgroup& q = cs.subgroup();
  double worst = 0.0;
  for (Element g = 0; g < cs.group().order(); ++g) {
    const CosetFactor f = coset_factorization(cs, g);
    Complex d = 1.0;
    for (Element x : f.q) d *= rho(static_cast<Element>(q.index_of(x))).determinant();
    worst = std::max(worst, std::abs(d - 1.0));
  }
  return worst;
}

std::vector<Complex> characteristic_polynomial(const RepMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  RepMatrix m = RepMatrix::Zero(n, n);
  const RepMatrix id = RepMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(k - 1)] * id;
    c[static_cast<std::size_t>(k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

bool StandardRepReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string StandardRepReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["group_order"] = group_order;
  j["character_matches"] = character_matches;
  j["transposition_lifts"] = transposition_lifts;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["passed"] = c.passed;
    if (!c.offending.empty()) e["offending"] = c.offending;
    arr.push_back(std::move(e));
  }
  return j.dump(indent);
}

std::string StandardRepReport::to_text() const {
  std::ostringstream out;
  out << "character comparison: " << character_matches << "/" << group_order << " match fix - 1\n";
  for (const auto& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.computed;
    if (!c.offending.empty()) out << " (at " << c.offending << ")";
    out << '\n';
  }
  return out.str();
}

namespace {

std::string describe(const PinDoubleCover& cover, Element x) {
  const Element g = cover.ext.projection[x];
  return "(" + std::to_string(x % cover.ext.modulus) + ", " + cover.pin.sn.elements[g].to_string() + ")";
}

std::string format_poly(const std::vector<long>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace

StandardRepReport verify_standard_rep() {
  const PinDoubleCover cover = pin_double_cover(5);
  const Representation rho = quaternion_model(cover, icosian_group());
  const Representation t = tensor_induction(cover.cosets, rho);
  const FiniteGroup& e = cover.ext.group;

  StandardRepReport report;
  report.group_order = e.order();
  report.homomorphism_defect = t.homomorphism_defect();

  {
    const Element z = cover.ext.lift(1, 0);
    const double dev = (t(z) - RepMatrix::Identity(t.dim(), t.dim())).cwiseAbs().maxCoeff();
    std::ostringstream got;
    got << "max deviation " << (dev <= kMatrixTolerance ? "0" : std::to_string(dev));
    report.checks.push_back({"central element acts trivially", "identity", got.str(), dev <= kMatrixTolerance,
                             dev <= kMatrixTolerance ? "" : describe(cover, z)});
  }
  {
    const Character chi = t.character();
    std::string first_bad;
    for (Element x = 0; x < e.order(); ++x) {
      const double expected = cover.pin.sn.elements[cover.ext.projection[x]].fixed_points() - 1;
      if (std::abs(chi(x) - expected) <= kCharacterTolerance)
        ++report.character_matches;
      else if (first_bad.empty())
        first_bad = describe(cover, x);
    }
    report.checks.push_back({"character equals fix - 1", std::to_string(e.order()) + "/" + std::to_string(e.order()),
                             std::to_string(report.character_matches) + "/" + std::to_string(e.order()),
                             report.character_matches == e.order(), first_bad});
  }
  {
    std::size_t good = 0;
    std::string first_bad;
    for (Element x = 0; x < e.order(); ++x) {
      if (cover.pin.sn.elements[cover.ext.projection[x]].cycle_type() != std::vector<int>{1, 1, 1, 2}) continue;
      ++report.transposition_lifts;
      if (std::abs(t(x).trace() - Complex(2.0)) <= kCharacterTolerance)
        ++good;
      else if (first_bad.empty())
        first_bad = describe(cover, x);
    }
    report.checks.push_back({"transposition lifts have trace 2",
                             std::to_string(report.transposition_lifts) + "/" + std::to_string(report.transposition_lifts),
                             std::to_string(good) + "/" + std::to_string(report.transposition_lifts),
                             report.transposition_lifts == 20 && good == 20, first_bad});
  }
  {
    const auto poly = characteristic_polynomial(t(cover.theta));
    std::vector<long> rounded;
    bool integral = true;
    for (const auto& c : poly) {
      const auto r = round_to_integer(c);
      integral = integral && r.has_value();
      rounded.push_back(r.value_or(0));
    }
    const std::vector<long> expected{1, -2, 0, 2, -1};  // (x - 1)^3 (x + 1)
    const bool ok = integral && rounded == expected;
    report.checks.push_back({"theta characteristic polynomial", format_poly(expected), format_poly(rounded), ok,
                             ok ? "" : describe(cover, cover.theta)});
  }
  return report;
}

std::vector<CatalogInstance> tensor_catalog() {
  std::vector<CatalogInstance> out;

  const PinDoubleCover five = pin_double_cover(5);
  const QuaternionGroup icosians = icosian_group();
  const Representation rho5 = quaternion_model(five, icosians);
  out.push_back({"omega5+/2.A5 icosian", five.cosets, five.theta, rho5});
  out.push_back({"omega5+/2.A5 icosian^theta", five.cosets, five.theta,
                 conjugate_representation(five.ext.group, five.even, five.theta, rho5)});

  // Q x C2 over Q: theta is central, so V^theta == V and V* == V.
  auto with_c2 = [&](const std::string& name, const QuaternionGroup& model) {
    const FiniteGroup prod = direct_product(model.group, cyclic_group(2));
    std::vector<Element> members;
    for (Element a = 0; a < model.group.order(); ++a) members.push_back(2 * a);
    const Subgroup q(prod, members);
    const Element theta = 1;
    Representation rho(induced_group(prod, q), model.rep.images());
    out.push_back({name, CosetSystem(prod, q, {0, theta}), theta, std::move(rho)});
  };
  with_c2("2.A5 x C2/2.A5 icosian", icosians);
  with_c2("2.S4 x C2/2.S4 binary octahedral", binary_octahedral_group());

  const PinDoubleCover four = pin_double_cover(4);
  const Representation rho4 = quaternion_model(four, hurwitz_group());
  const auto lambdas = linear_characters(four.even_group);
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    out.push_back({"pin 2.S4/2.A4 hurwitz twist " + std::to_string(j), four.cosets, four.theta,
                   rho4.twisted_by(lambdas[j])});
  return out;
}

}  // namespace quintrank
