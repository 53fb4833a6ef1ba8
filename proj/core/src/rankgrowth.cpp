#include "quintrank/rankgrowth.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quintrank {

CurveData CurveData::parse(const std::string& line) {
  std::istringstream in(line);
  CurveData c;
  std::string n;
  if (!(in >> c.label >> n)) throw std::invalid_argument("curve line needs `label N p^e ...`: '" + line + "'");
  if (c.conductor.set_str(n, 10) != 0 || c.conductor < 1) throw std::invalid_argument("bad conductor '" + n + "'");
  std::string tok;
  BigInt product = 1;
  while (in >> tok) {
    const auto caret = tok.find('^');
    BigInt p;
    unsigned long e = 1;
    if (p.set_str(tok.substr(0, caret), 10) != 0) throw std::invalid_argument("bad prime factor '" + tok + "'");
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        e = std::stoul(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
    }
    if (e == 0 || !is_probable_prime(p)) throw std::invalid_argument("'" + tok + "' is not a prime power");
    for (const auto& [q, f] : c.factorization)
      if (q == p) throw std::invalid_argument("prime " + p.get_str() + " listed twice");
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    product *= pe;
    c.factorization.emplace_back(p, static_cast<unsigned>(e));
  }
  if (product != c.conductor)
    throw std::invalid_argument("factorization of " + c.label + " multiplies to " + product.get_str() + ", not " +
                                c.conductor.get_str());
  std::sort(c.factorization.begin(), c.factorization.end());
  return c;
}

BigInt CurveData::n_minus() const {
  BigInt out = 1;
  for (const auto& [p, e] : factorization)
    if (e == 1) out *= p;
  return out;
}

BigInt CurveData::n_plus() const { return conductor / n_minus(); }

Reduction CurveData::reduction(const BigInt& p) const {
  for (const auto& [q, e] : factorization)
    if (q == p) return e == 1 ? Reduction::Multiplicative : Reduction::Additive;
  throw std::invalid_argument("prime " + p.get_str() + " does not divide the conductor of " + label);
}

std::vector<CurveData> read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path.string());
  std::vector<CurveData> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(CurveData::parse(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::EvenConductor: return "EvenConductor";
    case Reason::WrongSignature: return "WrongSignature";
    case Reason::RamifiedAtConductorPrime: return "RamifiedAtConductorPrime";
    case Reason::NPlusPrimeNotSplit: return "NPlusPrimeNotSplit";
    case Reason::NotS5Certified: return "NotS5Certified";
    case Reason::IncompleteData: return "IncompleteData";
  }
  return "IncompleteData";
}

std::string to_string(Parity p) { return p == Parity::Odd ? "Odd" : "Even"; }
std::string to_string(Growth g) { return g == Growth::Certified ? "Certified" : "Unknown"; }

Admissibility admissible(const CurveData& curve, const QuinticField& field) {
  if (!field.resolvent.complete)
    throw IncompleteData("admissible: discriminant of " + field.label + " is not fully factored");
  Admissibility a;
  auto record = [&](std::string name, bool ok, std::string detail, Reason r) {
    a.checks.push_back({std::move(name), ok, std::move(detail)});
    if (!ok) a.reasons.push_back(r);
  };

  record("S5 certified", field.certified(), to_string(field.s5.status), Reason::NotS5Certified);
  record("conductor odd", mpz_odd_p(curve.conductor.get_mpz_t()) != 0, "N = " + curve.conductor.get_str(),
         Reason::EvenConductor);
  record("single real embedding", field.r1 == 1, "real roots = " + std::to_string(field.r1), Reason::WrongSignature);
  {
    std::string bad;
    for (const auto& [p, e] : curve.factorization)
      if (mpz_divisible_p(field.disc.get_mpz_t(), p.get_mpz_t())) bad += (bad.empty() ? "" : ",") + p.get_str();
    record("unramified at primes of N", bad.empty(), bad.empty() ? "no p | N divides disc" : "p | disc: " + bad,
           Reason::RamifiedAtConductorPrime);
  }
  {
    std::string bad, detail;
    for (const auto& [p, e] : curve.factorization) {
      if (e == 1) continue;
      const Splitting s = splitting_in_resolvent(p, field.resolvent);
      detail += (detail.empty() ? "" : ",") + p.get_str() + ":" + to_string(s);
      if (s != Splitting::Split) bad += (bad.empty() ? "" : ",") + p.get_str();
    }
    record("primes of N+ split in L", bad.empty(), detail.empty() ? "N+ = 1" : detail, Reason::NPlusPrimeNotSplit);
  }
  a.ok = a.reasons.empty();
  return a;
}

ParityCertificate parity(const CurveData& curve, const QuinticField& field) {
  ParityCertificate c = certify(curve, field);
  if (!c.admissible) {
    std::string why;
    for (Reason r : c.reasons) why += (why.empty() ? "" : ", ") + to_string(r);
    throw NotAdmissible(c.reasons, "pair (" + curve.label + ", " + field.label + ") is not admissible: " + why);
  }
  return c;
}

ParityCertificate certify(const CurveData& curve, const QuinticField& field) {
  ParityCertificate c;
  c.curve = curve.label;
  c.field = field.label;
  Admissibility a;
  try {
    a = admissible(curve, field);
  } catch (const IncompleteData&) {
    c.reasons.push_back(Reason::IncompleteData);
    return c;
  }
  c.checks = a.checks;
  c.reasons = a.reasons;
  c.admissible = a.ok;
  if (!a.ok) return c;

  const BigInt& fund = field.resolvent.fundamental_disc;
  c.chi = 1;
  for (const auto& [p, e] : curve.factorization)
    if (e == 1) c.chi *= kronecker_symbol(fund, p);
  c.chi_direct = kronecker_symbol(fund, curve.n_minus());
  if (c.chi != c.chi_direct)
    throw std::logic_error("certify: Kronecker product and direct symbol disagree for " + field.label);
  c.parity = c.chi == -1 ? Parity::Odd : Parity::Even;
  c.growth = c.parity == Parity::Odd ? Growth::Certified : Growth::Unknown;
  return c;
}

std::vector<ParityCertificate> batch_certify(const CurveData& curve, const std::vector<QuinticField>& fields) {
  std::vector<ParityCertificate> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(certify(curve, f));
  return out;
}

std::string ParityCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["curve"] = curve;
  j["field"] = field;
  j["admissible"] = admissible;
  auto& rs = j["reasons"] = nlohmann::ordered_json::array();
  for (Reason r : reasons) rs.push_back(to_string(r));
  j["chi"] = admissible ? nlohmann::ordered_json(chi) : nlohmann::ordered_json(nullptr);
  j["parity"] = parity ? nlohmann::ordered_json(to_string(*parity)) : nlohmann::ordered_json(nullptr);
  j["growth"] = to_string(growth);
  return j.dump();
}

}  // namespace quintrank
