#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintrank/quintic_field.hpp"

namespace quintrank {

enum class Reduction { Multiplicative, Additive };

/// Conductor data of an elliptic curve over Q.
struct CurveData {
  std::string label;
  BigInt conductor;
  std::vector<std::pair<BigInt, unsigned>> factorization;  // ascending primes

  /// Parses `label N p1^e1 p2^e2 ...` (a bare prime means exponent 1) and
  /// checks that the factors are distinct primes whose product is N.
  static CurveData parse(const std::string& line);

  /// Product of the primes with exponent 1.
  BigInt n_minus() const;
  /// N / N^-.
  BigInt n_plus() const;
  Reduction reduction(const BigInt& p) const;
};

/// Reads one curve per nonblank line; '#' starts a comment.
std::vector<CurveData> read_curve_file(const std::filesystem::path& path);

enum class Reason { EvenConductor, WrongSignature, RamifiedAtConductorPrime, NPlusPrimeNotSplit, NotS5Certified, IncompleteData };
std::string to_string(Reason r);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Admissibility {
  bool ok = false;
  std::vector<Reason> reasons;
  std::vector<HypothesisCheck> checks;
};

/// Checks, in order: S_5 certification, N odd, exactly one real root, no
/// prime of N divides disc(f), and every prime of N^+ splits in L. Throws
/// IncompleteData if the resolvent kernel is not fully determined.
Admissibility admissible(const CurveData& curve, const QuinticField& field);

enum class Parity { Odd, Even };
enum class Growth { Certified, Unknown };
std::string to_string(Parity p);
std::string to_string(Growth g);

struct ParityCertificate {
  std::string curve;
  std::string field;
  bool admissible = false;
  std::vector<Reason> reasons;
  std::vector<HypothesisCheck> checks;
  /// prod over p | N^- of (fundamental_disc | p); 0 when not admissible.
  int chi = 0;
  /// (fundamental_disc | N^-) evaluated in one step; must equal chi.
  int chi_direct = 0;
  std::optional<Parity> parity;
  Growth growth = Growth::Unknown;

  /// One-line JSON {curve, field, admissible, reasons, chi, parity, growth}.
  std::string to_json() const;
};

class NotAdmissible : public std::runtime_error {
public:
  NotAdmissible(std::vector<Reason> reasons, const std::string& what)
      : std::runtime_error(what), reasons_(std::move(reasons)) {}
  const std::vector<Reason>& reasons() const { return reasons_; }

private:
  std::vector<Reason> reasons_;
};

/// Parity of ord_{s=1} L(E/K, s) / L(E/Q, s) from the sign of the Kronecker
/// product over N^-; growth is Certified exactly when the parity is odd.
/// Throws NotAdmissible when the hypotheses fail.
ParityCertificate parity(const CurveData& curve, const QuinticField& field);

/// Like parity, but a failing pair yields a certificate with growth Unknown
/// and its reasons instead of throwing.
ParityCertificate certify(const CurveData& curve, const QuinticField& field);

std::vector<ParityCertificate> batch_certify(const CurveData& curve, const std::vector<QuinticField>& fields);

}  // namespace quintrank
