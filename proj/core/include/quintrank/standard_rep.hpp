#pragma once

#include <string>
#include <vector>

#include "quintrank/cocycle.hpp"
#include "quintrank/cosets.hpp"
#include "quintrank/icosian.hpp"
#include "quintrank/representation.hpp"
#include "quintrank/tensor_induction.hpp"

namespace quintrank {

/// The Pin double cover of S_n together with the preimage of A_n, a lift
/// theta of the transposition (0 1) and the index-2 cosets {1, theta}.
struct PinDoubleCover {
  PinCover pin;
  CentralExtension ext;
  Subgroup even;            // preimage of A_n
  FiniteGroup even_group;   // induced_group(ext.group, even)
  Element theta = 0;
  CosetSystem cosets;       // representatives {1, theta}
};
PinDoubleCover pin_double_cover(int n);

/// Pulls the quaternion model back to the preimage of A_n through an explicit
/// isomorphism; throws std::runtime_error if the groups are not isomorphic.
Representation quaternion_model(const PinDoubleCover& cover, const QuaternionGroup& model);

/// Largest |prod_i det rho(q_i(g)) - 1| over g, i.e. the deviation of
/// det(rho) o transfer from the trivial character.
double det_transfer_deviation(const CosetSystem& cs, const Representation& rho);

/// Characteristic polynomial det(xI - A), leading coefficient first
/// (Faddeev-LeVerrier).
std::vector<Complex> characteristic_polynomial(const RepMatrix& a);

struct ReportCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string offending;  // first failing element, empty when passed
};

struct StandardRepReport {
  std::vector<ReportCheck> checks;
  std::size_t group_order = 0;
  std::size_t character_matches = 0;
  std::size_t transposition_lifts = 0;
  double homomorphism_defect = 0.0;

  bool passed() const;
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

/// Builds the order-240 cover with transposition lifts of order 2, identifies
/// the preimage of A_5 with the icosians, tensor-induces the 2-dimensional
/// representation to the whole cover and checks that the result is the
/// standard representation of S_5: the central element acts as 1, the
/// character is fix - 1, transposition lifts have trace 2, and theta has
/// characteristic polynomial (x - 1)^3 (x + 1).
StandardRepReport verify_standard_rep();

/// One index-2 instance for tensor_criterion.
struct CatalogInstance {
  std::string name;
  CosetSystem cosets;
  Element theta = 0;
  Representation rho;
};

/// The Omega_5^+ instance with the icosian representation and with its theta
/// conjugate, the direct products 2.A5 x C2 and 2.S4 x C2 (binary
/// octahedral) over their first factor, and the Pin cover of S_4 over 2.A4
/// with the quaternion representation twisted by each linear character of 2.A4.
std::vector<CatalogInstance> tensor_catalog();

}  // namespace quintrank
