#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <oracles.hpp>

#include "quintrank/cocycle.hpp"
#include "quintrank/icosian.hpp"
#include "quintrank/isomorphism.hpp"
#include "quintrank/subgroup.hpp"

using namespace quintrank;

namespace {

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  REQUIRE((std::size_t{1} << k) == n);
  return k;
}

struct NamedGroup {
  const char* name;
  FiniteGroup group;
  int expected_h2;
};

std::vector<NamedGroup> small_groups() {
  const auto s4 = symmetric_group(4);
  const FiniteGroup a4 = induced_group(s4.group, even_subgroup(s4));
  const auto hur = hurwitz_group();
  const FiniteGroup q8 = induced_group(hur.group, derived_subgroup(hur.group));
  REQUIRE(q8.order() == 8);
  return {{"C2", cyclic_group(2), 1},
          {"C4", cyclic_group(4), 1},
          {"C2xC2", direct_product(cyclic_group(2), cyclic_group(2)), 3},
          {"S3", symmetric_group(3).group, 1},
          {"D8", dihedral_group(4).group, 3},
          {"Q8", q8, 2},
          {"A4", a4, 1},
          {"S4", s4.group, 2}};
}

std::vector<std::uint32_t> random_cochain(std::size_t n, std::uint32_t modulus, std::mt19937& rng) {
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 1; i < n; ++i) c[i] = std::uniform_int_distribution<std::uint32_t>(0, modulus - 1)(rng);
  return c;
}

}  // namespace

TEST_CASE("zero cochain is a cocycle and a flipped entry is not") {
  const auto s3 = symmetric_group(3);
  const auto m = CoefficientModule::trivial(s3.group, 1);
  CHECK(verify_cocycle(Cocycle2::zero(s3.group, m)));
  const PinCover pin = pin_cocycle_sn(3);
  REQUIRE(verify_cocycle(pin.omega));
  auto values = pin.omega.values();
  values[1 * 6 + 2] ^= 1;
  CHECK_FALSE(verify_cocycle(Cocycle2::from_table(s3.group, m, values)));
}

TEST_CASE("pin cocycle is normalized and vanishes on transposition squares") {
  for (int n : {2, 3, 4, 5}) {
    const PinCover pin = pin_cocycle_sn(n);
    const FiniteGroup& g = pin.sn.group;
    for (Element x = 0; x < g.order(); ++x) {
      REQUIRE(pin.omega(0, x) == 0);
      REQUIRE(pin.omega(x, 0) == 0);
      if (pin.sn.elements[x].cycle_type().back() == 2 && pin.sn.elements[x].fixed_points() == n - 2)
        REQUIRE(pin.omega(x, x) == 0);
    }
  }
  CHECK_THROWS_AS(pin_cocycle_sn(1), std::invalid_argument);
  CHECK_THROWS_AS(pin_cocycle_sn(7), std::invalid_argument);
}

TEST_CASE("pin cocycle on S4 agrees with a floating-point Clifford computation") {
  const PinCover pin = pin_cocycle_sn(4);
  const auto& el = pin.sn.elements;
  std::vector<oracle::Multivector> lift;
  for (const auto& p : el) {
    const std::vector<int> img(p.images().begin(), p.images().end());
    const auto swaps = oracle::sorting_swaps(img);
    REQUIRE(swaps == p.transposition_factorization());
    oracle::Multivector m = oracle::Multivector::scalar(1.0);
    for (auto [i, j] : swaps) m = m * oracle::Multivector::reflection(i, j);
    lift.push_back(m);
  }
  for (Element s = 0; s < el.size(); ++s)
    for (Element t = 0; t < el.size(); ++t) {
      const int sign = (lift[s] * lift[t]).relative_sign(lift[pin.sn.group.mul(s, t)]);
      REQUIRE(sign != 0);
      REQUIRE(pin.omega(s, t) == (sign < 0 ? 1u : 0u));
    }
}

TEST_CASE("pin cocycle on S5 and its restriction to A5 are not coboundaries") {
  const PinCover pin = pin_cocycle_sn(5);
  CHECK(verify_cocycle(pin.omega));
  CHECK_FALSE(coboundary_witness(pin.omega).has_value());
  const Cocycle2 on_a5 = pin.omega.restrict_to(even_subgroup(pin.sn));
  CHECK(verify_cocycle(on_a5));
  CHECK_FALSE(coboundary_witness(on_a5).has_value());
  CHECK_FALSE(oracle::c2_coboundary_by_search(on_a5.group(), on_a5.values()).has_value());

  const Element t = *find_label(pin.sn, Permutation::transposition(5, 0, 1));
  const Cocycle2 on_t = pin.omega.restrict_to(generated_subgroup(pin.sn.group, {t}));
  const auto w = coboundary_witness(on_t);
  REQUIRE(w.has_value());
  CHECK(coboundary(on_t.group(), on_t.module(), *w) == on_t);
}

TEST_CASE("coboundary witnesses agree with an exhaustive search") {
  const PinCover pin = pin_cocycle_sn(4);
  const auto& c = pin.sn;
  auto lab = [&](std::initializer_list<std::initializer_list<int>> cyc) { return *find_label(c, Permutation::from_cycles(4, cyc)); };
  const std::vector<Subgroup> subs{generated_subgroup(c.group, {lab({{0, 1}})}),
                                   generated_subgroup(c.group, {lab({{0, 1}, {2, 3}})}),
                                   generated_subgroup(c.group, {lab({{0, 1}, {2, 3}}), lab({{0, 2}, {1, 3}})}),
                                   generated_subgroup(c.group, {lab({{0, 1}}), lab({{2, 3}})}),
                                   generated_subgroup(c.group, {lab({{0, 1}}), lab({{0, 1, 2}})}),
                                   generated_subgroup(c.group, {lab({{0, 1, 2, 3}}), lab({{0, 2}})}),
                                   even_subgroup(c),
                                   whole_group(c.group)};
  int split = 0;
  for (const Subgroup& h : subs) {
    const Cocycle2 w = pin.omega.restrict_to(h);
    const auto witness = coboundary_witness(w);
    const auto searched = oracle::c2_coboundary_by_search(w.group(), w.values());
    CHECK(witness.has_value() == searched.has_value());
    if (witness) {
      ++split;
      CHECK(coboundary(w.group(), w.module(), *witness) == w);
    }
  }
  CHECK(split > 0);
  CHECK(split < static_cast<int>(subs.size()));
}

TEST_CASE("H^2 with two-element coefficients matches a direct linear-algebra count") {
  for (const auto& [name, g, expected] : small_groups()) {
    CAPTURE(name);
    const int h2 = h2_dimension(g, CoefficientModule::trivial(g, 1));
    CHECK(h2 == expected);
    CHECK(static_cast<std::size_t>(h2) == oracle::h2_trivial_c2(g));
  }
}

TEST_CASE("H^1 counts homomorphisms to C2") {
  const auto s5 = symmetric_group(5);
  const FiniteGroup a5 = induced_group(s5.group, even_subgroup(s5));
  const auto s4 = symmetric_group(4);
  const FiniteGroup a4 = induced_group(s4.group, even_subgroup(s4));
  const std::vector<std::pair<FiniteGroup, int>> cases{{a5, 0}, {s5.group, 1}, {cyclic_group(2), 1}, {a4, 0}};
  for (const auto& [g, expected] : cases) {
    const int h1 = h1_dimension(g, CoefficientModule::trivial(g, 1));
    CHECK(h1 == expected);
    CHECK(h1 == log2_exact(oracle::homs_to_c2(g)));
  }
  for (const auto& [name, g, unused] : small_groups()) {
    CAPTURE(name);
    CHECK(h1_dimension(g, CoefficientModule::trivial(g, 1)) == log2_exact(oracle::homs_to_c2(g)));
  }
}

TEST_CASE("Z/4 coefficients over C2") {
  const FiniteGroup c2 = cyclic_group(2);
  const auto twisted = CoefficientModule::twisted(c2, 2, {1, -1});
  const auto trivial = CoefficientModule::trivial(c2, 2);
  CHECK_FALSE(twisted.acts_trivially());
  CHECK(h1_dimension(c2, twisted) == 1);
  CHECK(h2_dimension(c2, twisted) == 1);
  CHECK(h1_dimension(c2, trivial) == 1);
  CHECK(h2_dimension(c2, trivial) == 1);
  CHECK_THROWS_AS(CoefficientModule::twisted(c2, 2, {-1, -1}), std::invalid_argument);
}

TEST_CASE("size limits") {
  const auto s5 = symmetric_group(5);
  CHECK_THROWS_AS(h2_dimension(s5.group, CoefficientModule::trivial(s5.group, 1)), TooLarge);
  CohomologyLimits tight;
  tight.max_group_order_h1 = 10;
  CHECK_THROWS_AS(h1_dimension(s5.group, CoefficientModule::trivial(s5.group, 1), tight), TooLarge);
}

TEST_CASE("H^2 does not depend on element labels") {
  std::mt19937 rng(7);
  const FiniteGroup g = symmetric_group(4).group;
  const std::size_t n = g.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Element> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(perm[s]);
  const FiniteGroup relabelled = FiniteGroup::from_table(n, table, gens);
  CHECK(h2_dimension(relabelled, CoefficientModule::trivial(relabelled, 1)) == 2);
}

TEST_CASE("central extensions") {
  SUBCASE("the zero cocycle gives the direct product") {
    const FiniteGroup s3 = symmetric_group(3).group;
    const CentralExtension e = central_extension(Cocycle2::zero(s3, CoefficientModule::trivial(s3, 1)));
    CHECK(e.group.order() == 12);
    CHECK(find_isomorphism(e.group, direct_product(s3, cyclic_group(2))).has_value());
  }
  SUBCASE("the Pin cover of S5") {
    const PinCover pin = pin_cocycle_sn(5);
    const CentralExtension e = central_extension(pin.omega);
    CHECK(e.group.order() == 240);
    CHECK(e.kernel.order() == 2);
    for (Element x = 0; x < pin.sn.group.order(); ++x) {
      const auto& p = pin.sn.elements[x];
      if (p.sign() < 0 && p.fixed_points() == 3) CHECK(e.group.element_order(e.lift(0, x)) == 2);
    }
    const CentralExtension e_a5 = central_extension(pin.omega.restrict_to(even_subgroup(pin.sn)));
    CHECK(e_a5.group.order() == 120);
    int involutions = 0;
    for (Element x = 0; x < e_a5.group.order(); ++x) involutions += e_a5.group.element_order(x) == 2;
    CHECK(involutions == 1);
    CHECK(find_isomorphism(e_a5.group, icosian_group().group).has_value());
  }
  SUBCASE("cohomologous cocycles give isomorphic extensions") {
    std::mt19937 rng(11);
    for (unsigned r : {1u, 2u}) {
      const PinCover pin = pin_cocycle_sn(4);
      const FiniteGroup& g = pin.sn.group;
      std::vector<std::uint32_t> vals = pin.omega.values();
      for (auto& v : vals) v <<= (r - 1);  // 2^(r-1) omega has order 2 in Z/2^r
      const Cocycle2 omega = Cocycle2::from_table(g, CoefficientModule::trivial(g, r), vals);
      REQUIRE(verify_cocycle(omega));
      const std::uint32_t mod = 1u << r;
      const Cochain1 c = random_cochain(g.order(), mod, rng);
      const Cocycle2 shifted = omega.plus_coboundary(c);
      REQUIRE(verify_cocycle(shifted));
      const CentralExtension e1 = central_extension(omega);
      const CentralExtension e2 = central_extension(shifted);
      std::vector<Element> phi(e1.group.order());
      for (Element x = 0; x < g.order(); ++x)
        for (std::uint32_t a = 0; a < mod; ++a) phi[e1.lift(a, x)] = e2.lift((a + mod - c[x]) % mod, x);
      CHECK(is_isomorphism(e1.group, e2.group, phi));
    }
  }
}

TEST_CASE("extension construction is deterministic") {
  const PinCover p1 = pin_cocycle_sn(5);
  const PinCover p2 = pin_cocycle_sn(5);
  CHECK(p1.omega == p2.omega);
  const CentralExtension e1 = central_extension(p1.omega);
  const CentralExtension e2 = central_extension(p2.omega);
  CHECK(e1.group.dump() == e2.group.dump());
  std::map<std::size_t, int> census;
  for (Element x = 0; x < e1.group.order(); ++x) ++census[e1.group.element_order(x)];
  int total = 0;
  for (auto [ord, count] : census) {
    CHECK(240 % ord == 0);
    total += count;
  }
  CHECK(total == 240);
  CHECK(census[1] == 1);
}

TEST_CASE("cocycle text round trip") {
  const PinCover pin = pin_cocycle_sn(5);
  const std::string text = pin.omega.serialize();
  CHECK(text.rfind("120 1\n", 0) == 0);
  std::istringstream in(text);
  const Cocycle2 back = Cocycle2::deserialize(pin.sn.group, pin.omega.module(), in);
  CHECK(back == pin.omega);
  std::istringstream truncated(text.substr(0, text.size() / 2));
  CHECK_THROWS(Cocycle2::deserialize(pin.sn.group, pin.omega.module(), truncated));
}

TEST_CASE("exact Clifford arithmetic") {
  const auto t = CliffordElement::transposition_lift(0, 1);
  CHECK(t * t == CliffordElement::scalar(1));
  CHECK(blade_product_sign(0b1, 0b1) == 1);
  CHECK(blade_product_sign(0b10, 0b01) == -1);
  CHECK(blade_product_sign(0b01, 0b10) == 1);
  const auto u = CliffordElement::transposition_lift(1, 2);
  CHECK((t * u).relative_sign(t * u) == 1);
  CHECK((t * u * u).relative_sign(t) == 1);
  CHECK_FALSE((t * u).relative_sign(u * t).has_value());
  // (e0 - e1)(e2 - e3)/2 squares to -1: a double transposition lifts to order 4.
  const auto d = t * CliffordElement::transposition_lift(2, 3);
  CHECK((d * d).relative_sign(CliffordElement::scalar(1)) == -1);
}
