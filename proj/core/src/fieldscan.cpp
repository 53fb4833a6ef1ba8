#include "quintrank/fieldscan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace quintrank {

FieldFormat parse_field_format(const std::string& name) {
  if (name == "csv") return FieldFormat::Csv;
  if (name == "jsonl") return FieldFormat::Jsonl;
  throw std::invalid_argument("unknown field format '" + name + "' (expected csv or jsonl)");
}

namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// label and polynomial from one row; throws std::invalid_argument on bad syntax.
std::pair<std::string, IntPolynomial> parse_row(const std::string& line, FieldFormat format) {
  if (format == FieldFormat::Csv) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected label,a5,...,a0");
    std::string label = line.substr(0, comma);
    IntPolynomial f = parse_coefficients(line.substr(comma + 1));
    return {label, f};
  }
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("not a JSON object");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw std::invalid_argument("missing coeffs array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer())
      coeffs.emplace_back(c.get<long>());
    else if (c.is_string()) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
      coeffs.push_back(v);
    } else {
      throw std::invalid_argument("coefficients must be integers");
    }
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return {label, IntPolynomial::from_descending(coeffs)};
}

}  // namespace

IngestResult ingest_fields(const std::filesystem::path& path, FieldFormat format, const FieldBuilder& builder) {
  std::ifstream in(path);
  if (!in) throw FieldIoError("cannot open field file " + path.string());
  IngestResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    if (format == FieldFormat::Csv && line.rfind("label", 0) == 0) continue;
    std::pair<std::string, IntPolynomial> row;
    try {
      row = parse_row(line, format);
    } catch (const std::invalid_argument& e) {
      out.errors.push_back({lineno, "Parse", e.what()});
      continue;
    }
    if (row.first.empty()) row.first = "line" + std::to_string(lineno);
    try {
      out.fields.push_back(builder.build(row.first, row.second));
    } catch (const FieldRejected& e) {
      out.errors.push_back({lineno, to_string(e.reason()), e.what()});
    }
  }
  if (in.bad()) throw FieldIoError("read error on " + path.string());
  return out;
}

namespace {

struct Candidate {
  std::vector<long> coeffs;  // a5..a0
  QuinticField field;
};

bool smaller(const Candidate& a, const Candidate& b) {
  const int c = cmp(abs(a.field.disc), abs(b.field.disc));
  if (c != 0) return c < 0;
  return a.coeffs < b.coeffs;
}

struct WorkerTotals {
  std::size_t polynomials = 0, separable = 0, within = 0, certified = 0;
  std::vector<Candidate> kept;
};

void enumerate_slice(const EnumerationOptions& opt, const FieldBuilder& builder, long a4, WorkerTotals& out) {
  const long h = opt.height;
  for (long a3 = -h; a3 <= h; ++a3)
    for (long a2 = -h; a2 <= h; ++a2)
      for (long a1 = -h; a1 <= h; ++a1)
        for (long a0 = -h; a0 <= h; ++a0) {
          ++out.polynomials;
          std::vector<long> c{1, a4, a3, a2, a1, a0};
          const IntPolynomial f = IntPolynomial::from_descending({1, a4, a3, a2, a1, a0});
          std::optional<QuinticField> q;
          try {
            q = builder.build_bounded(coefficient_key(f), f, opt.disc_bound);
          } catch (const FieldRejected&) {
            continue;
          }
          ++out.separable;
          if (!q) continue;
          ++out.within;
          if (!q->certified()) continue;
          ++out.certified;
          out.kept.push_back({std::move(c), std::move(*q)});
        }
}

}  // namespace

EnumerationResult enumerate_quintics(const EnumerationOptions& opt, const FieldBuilder& builder) {
  if (opt.height < 0) throw std::invalid_argument("enumerate_quintics: negative height");
  std::vector<long> slices;
  for (long a4 = -opt.height; a4 <= opt.height; ++a4) slices.push_back(a4);
  std::size_t nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, slices.size());

  std::vector<WorkerTotals> totals(slices.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < slices.size(); i = next++) {
        try {
          enumerate_slice(opt, builder, slices[i], totals[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  EnumerationResult res;
  std::vector<Candidate> all;
  for (auto& w : totals) {
    res.stats.polynomials += w.polynomials;
    res.stats.separable += w.separable;
    res.stats.within_bound += w.within;
    res.stats.certified += w.certified;
    for (auto& c : w.kept) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), smaller);

  // Group by fingerprint; the first member in sorted order represents the group.
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < all.size(); ++i) groups[all[i].field.fingerprint].push_back(i);
  std::vector<std::size_t> reps;
  for (const auto& [fp, members] : groups) {
    const Candidate& rep = all[members.front()];
    reps.push_back(members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      const Candidate& other = all[members[k]];
      const BigInt both = rep.field.disc * other.field.disc;
      const auto a = good_prime_patterns(rep.field.poly, both, builder.options().fingerprint_primes, opt.audit_primes);
      const auto b = good_prime_patterns(other.field.poly, both, builder.options().fingerprint_primes, opt.audit_primes);
      ++res.stats.audit_comparisons;
      if (a != b) {
        res.stats.audit_failures.push_back(other.field.label + " vs " + rep.field.label);
        reps.push_back(members[k]);
      } else {
        ++res.stats.merged;
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  for (std::size_t i : reps) res.fields.push_back(std::move(all[i].field));
  return res;
}

ScanReport scan(const CurveData& curve, const std::vector<QuinticField>& fields, const std::vector<BigInt>& edges,
                std::size_t min_samples) {
  if (!std::is_sorted(edges.begin(), edges.end())) throw std::invalid_argument("scan: bucket edges must ascend");
  ScanReport report;
  report.curve = curve.label;
  for (const auto& x : edges) report.buckets.push_back({x, 0, 0, 0, std::nullopt});
  for (const auto& f : fields) {
    const ParityCertificate c = certify(curve, f);
    const BigInt d = abs(f.disc);
    for (auto& b : report.buckets) {
      if (d > b.x) continue;
      ++b.total;
      if (c.admissible) ++b.admissible;
      if (c.parity == Parity::Odd) ++b.odd;
    }
  }
  for (auto& b : report.buckets)
    if (b.admissible >= min_samples && b.admissible > 0)
      b.proportion = static_cast<double>(b.odd) / static_cast<double>(b.admissible);
  return report;
}

std::string ScanReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["curve"] = curve;
  auto& arr = j["buckets"] = nlohmann::ordered_json::array();
  for (const auto& b : buckets) {
    nlohmann::ordered_json e;
    if (b.x.fits_slong_p())
      e["X"] = b.x.get_si();
    else
      e["X"] = b.x.get_str();
    e["total"] = b.total;
    e["admissible"] = b.admissible;
    e["odd"] = b.odd;
    e["proportion"] = b.proportion ? nlohmann::ordered_json(*b.proportion) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(e));
  }
  return j.dump(indent);
}

}  // namespace quintrank
