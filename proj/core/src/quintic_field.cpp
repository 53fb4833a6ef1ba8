#include "quintrank/quintic_field.hpp"

#include <sstream>

#include "quintrank/field_cache.hpp"

namespace quintrank {

std::string to_string(FieldRejection r) {
  switch (r) {
    case FieldRejection::NotQuintic: return "NotQuintic";
    case FieldRejection::NotMonic: return "NotMonic";
    case FieldRejection::NotSeparable: return "NotSeparable";
  }
  return "NotSeparable";
}

std::string coefficient_key(const IntPolynomial& f) {
  std::string s;
  for (const auto& c : f.descending()) s += (s.empty() ? "" : ",") + c.get_str();
  return s;
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
    const std::string tok = item.substr(b, e - b + 1);
    BigInt v;
    if (v.set_str(tok, 10) != 0) throw std::invalid_argument("bad coefficient '" + tok + "'");
    coeffs.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  return IntPolynomial::from_descending(coeffs);
}

std::vector<FactorPattern> good_prime_patterns(const IntPolynomial& f, const BigInt& disc, std::size_t skip,
                                               std::size_t count) {
  std::vector<FactorPattern> out;
  std::size_t seen = 0;
  for (std::uint32_t p : small_primes()) {
    if (out.size() == count) break;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p) || mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
    if (seen++ < skip) continue;
    out.push_back(factor_pattern_mod_p(f, p));
  }
  return out;
}

FieldBuilder::FieldBuilder(FieldOptions options, FieldCache* cache) : options_(options), cache_(cache) {}

namespace {

void validate_shape(const IntPolynomial& f) {
  if (f.degree() != 5) throw FieldRejected(FieldRejection::NotQuintic, "polynomial " + f.to_string() + " is not a quintic");
  if (f.lead() != 1) throw FieldRejected(FieldRejection::NotMonic, "polynomial " + f.to_string() + " is not monic");
}

}  // namespace

std::optional<QuinticField> FieldBuilder::from_cache(const std::string& label, const IntPolynomial& f) const {
  if (!cache_) return std::nullopt;
  const auto rec = cache_->get(coefficient_key(f));
  if (!rec) return std::nullopt;
  try {
    QuinticField q = decode_derived(*rec, label, f);
    ++cache_hits_;
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Polynomials that never become fields (inseparable or out of bound) keep
// just their discriminant under a "disc:" key.
BigInt FieldBuilder::discriminant(const IntPolynomial& f) const {
  const std::string key = "disc:" + coefficient_key(f);
  if (cache_) {
    BigInt d;
    if (const auto rec = cache_->get(key); rec && d.set_str(*rec, 10) == 0) {
      ++cache_hits_;
      return d;
    }
  }
  ++disc_count_;
  return poly_discriminant(f);
}

void FieldBuilder::remember_discriminant(const IntPolynomial& f, const BigInt& disc) const {
  if (cache_) cache_->put("disc:" + coefficient_key(f), disc.get_str());
}

QuinticField FieldBuilder::build(std::string label, const IntPolynomial& f) const {
  validate_shape(f);
  if (auto hit = from_cache(label, f)) return *hit;
  const BigInt disc = discriminant(f);
  if (disc == 0) {
    remember_discriminant(f, disc);
    throw FieldRejected(FieldRejection::NotSeparable, "polynomial " + f.to_string() + " has a repeated root");
  }
  QuinticField q = derive(std::move(label), f, disc);
  if (cache_) cache_->put(coefficient_key(f), encode_derived(q));
  return q;
}

std::optional<QuinticField> FieldBuilder::build_bounded(std::string label, const IntPolynomial& f,
                                                        const BigInt& max_abs_disc) const {
  validate_shape(f);
  if (auto hit = from_cache(label, f)) {
    if (abs(hit->disc) > max_abs_disc) return std::nullopt;
    return hit;
  }
  const BigInt disc = discriminant(f);
  if (disc == 0 || abs(disc) > max_abs_disc) remember_discriminant(f, disc);
  if (disc == 0) throw FieldRejected(FieldRejection::NotSeparable, "polynomial " + f.to_string() + " has a repeated root");
  if (abs(disc) > max_abs_disc) return std::nullopt;
  QuinticField q = derive(std::move(label), f, disc);
  if (cache_) cache_->put(coefficient_key(f), encode_derived(q));
  return q;
}

QuinticField FieldBuilder::derive(std::string label, const IntPolynomial& f, const BigInt& disc) const {
  QuinticField q;
  q.label = std::move(label);
  q.poly = f;
  q.disc = disc;
  q.r1 = real_root_count(f);
  q.r2 = (5 - q.r1) / 2;
  q.resolvent = resolvent_from_disc(disc);
  q.s5 = certify_s5(f, disc, options_.prime_budget);
  std::string fp = q.resolvent.squarefree_kernel.get_str() + ";";
  const auto pats = good_prime_patterns(f, disc, 0, options_.fingerprint_primes);
  for (std::size_t i = 0; i < pats.size(); ++i) fp += (i ? "/" : "") + pats[i].to_string();
  q.fingerprint = std::move(fp);
  return q;
}

}  // namespace quintrank
