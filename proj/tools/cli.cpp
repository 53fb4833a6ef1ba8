#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "quintrank/cocycle.hpp"
#include "quintrank/field_cache.hpp"
#include "quintrank/fieldscan.hpp"
#include "quintrank/rankgrowth.hpp"
#include "quintrank/standard_rep.hpp"
#include "selftest.hpp"

namespace quintrank::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json big(const BigInt& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

struct Options {
  bool json = false;
  std::string curve;
  std::string curve_file;
  std::string poly;
  std::string fields;
  std::string format;
  std::string buckets;
  std::string cache;
  long height = -1;
  std::size_t prime_budget = kDefaultPrimeBudget;
};

std::vector<CurveData> load_curves(const Options& o) {
  if (o.curve.empty() == o.curve_file.empty()) throw UsageError("give exactly one of --curve and --curve-file");
  if (!o.curve.empty()) {
    try {
      return {CurveData::parse(o.curve)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--curve: ") + e.what());
    }
  }
  std::vector<CurveData> curves;
  try {
    curves = read_curve_file(o.curve_file);
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  if (curves.empty()) throw DataError("no curves in " + o.curve_file);
  return curves;
}

IntPolynomial load_poly(const Options& o) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  try {
    return parse_coefficients(o.poly);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

QuinticField build_field(const Options& o, const IntPolynomial& f) {
  FieldOptions fo;
  fo.prime_budget = o.prime_budget;
  try {
    return FieldBuilder(fo).build(coefficient_key(f), f);
  } catch (const FieldRejected& e) {
    throw DataError(to_string(e.reason()) + ": " + e.what());
  }
}

std::vector<BigInt> parse_buckets(const std::string& text) {
  if (text.empty()) throw UsageError("--buckets is required");
  std::vector<BigInt> edges;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    BigInt x;
    if (tok.empty() || x.set_str(tok, 10) != 0 || x < 0) throw UsageError("--buckets: bad edge '" + tok + "'");
    if (!edges.empty() && x <= edges.back()) throw UsageError("--buckets: edges must ascend");
    edges.push_back(x);
  }
  if (edges.empty()) throw UsageError("--buckets: no edges");
  return edges;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  const auto checks = run_selftest();
  const bool passed = std::all_of(checks.begin(), checks.end(), [](const SelfCheck& c) { return c.passed; });
  if (o.json) {
    Json j;
    j["command"] = "selftest";
    j["passed"] = passed;
    auto& arr = j["checks"] = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) out << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  if (!passed) err << "selftest: some checks failed\n";
  return passed ? kOk : kCheckFailed;
}

int cmd_h2(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s4 = symmetric_group(4);
  const auto s5 = symmetric_group(5);
  struct Row {
    std::string name;
    FiniteGroup g;
    bool with_h2;
  };
  const std::vector<Row> rows{{"S4", s4.group, true},
                              {"A4", induced_group(s4.group, even_subgroup(s4)), true},
                              {"A5", induced_group(s5.group, even_subgroup(s5)), false}};
  Json table = Json::array();
  bool passed = true;
  for (const auto& r : rows) {
    const auto m = CoefficientModule::trivial(r.g, 1);
    Json e{{"group", r.name}, {"order", r.g.order()}, {"h1", h1_dimension(r.g, m)}};
    e["h2"] = r.with_h2 ? Json(h2_dimension(r.g, m)) : Json(nullptr);
    table.push_back(std::move(e));
  }
  passed = table[0]["h2"] == 2 && table[1]["h2"] == 1 && table[1]["h1"] == 0 && table[2]["h1"] == 0;

  const PinCover pin = pin_cocycle_sn(5);
  const Cocycle2 on_a5 = pin.omega.restrict_to(even_subgroup(pin.sn));
  Json classes = Json::array();
  for (const auto& [name, omega] : {std::pair<std::string, const Cocycle2*>{"S5", &pin.omega}, {"A5", &on_a5}}) {
    const bool valid = verify_cocycle(*omega);
    const bool coboundary = coboundary_witness(*omega).has_value();
    passed = passed && valid && !coboundary;
    classes.push_back(Json{{"group", name}, {"cocycle", "pin"}, {"valid", valid}, {"coboundary", coboundary}});
  }

  if (o.json) {
    out << Json{{"command", "h2"}, {"coefficients", "C2"}, {"table", table}, {"classes", classes}, {"passed", passed}}
               .dump(2)
        << '\n';
  } else {
    out << "group order h1 h2\n";
    for (const auto& e : table)
      out << e["group"].get<std::string>() << ' ' << e["order"] << ' ' << e["h1"] << ' '
          << (e["h2"].is_null() ? std::string("-") : e["h2"].dump()) << '\n';
    for (const auto& c : classes)
      out << "pin cocycle on " << c["group"].get<std::string>() << ": " << (c["valid"].get<bool>() ? "valid" : "INVALID")
          << ", class " << (c["coboundary"].get<bool>() ? "zero" : "nonzero") << '\n';
  }
  if (!passed) err << "h2: table disagrees with the expected values\n";
  return passed ? kOk : kCheckFailed;
}

int cmd_standard_rep(const Options& o, std::ostream& out, std::ostream& err) {
  const StandardRepReport r = verify_standard_rep();
  out << (o.json ? r.to_json(2) + "\n" : r.to_text());
  if (!r.passed()) err << "standard-rep: verification failed\n";
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream&) {
  const QuinticField f = build_field(o, load_poly(o));
  const auto& rd = f.resolvent;
  const auto prime = [](const std::optional<std::uint64_t>& p) { return p ? Json(*p) : Json(nullptr); };
  Json j;
  j["poly"] = f.poly.to_string();
  j["coeffs"] = Json::array();
  for (const auto& c : f.coeffs()) j["coeffs"].push_back(big(c));
  j["disc"] = big(f.disc);
  j["signature"] = Json::array({f.r1, f.r2});
  j["resolvent"] = Json{{"squarefree_kernel", big(rd.squarefree_kernel)},
                        {"fundamental_disc", big(rd.fundamental_disc)},
                        {"complete", rd.complete},
                        {"degenerate", rd.degenerate}};
  j["s5"] = Json{{"status", to_string(f.s5.status)},
                 {"five_cycle_prime", prime(f.s5.five_cycle_prime)},
                 {"transposition_prime", prime(f.s5.transposition_prime)},
                 {"primes_scanned", f.s5.primes_scanned}};
  j["fingerprint"] = f.fingerprint;
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "poly: " << j["poly"].get<std::string>() << "\ndisc: " << f.disc << "\nsignature: (" << f.r1 << ", "
        << f.r2 << ")\nresolvent kernel: " << rd.squarefree_kernel << (rd.complete ? "" : " (incomplete)")
        << (rd.degenerate ? " (degenerate)" : "") << "\nfundamental discriminant: " << rd.fundamental_disc
        << "\nS5: " << to_string(f.s5.status) << " after " << f.s5.primes_scanned << " primes\n";
  }
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto curves = load_curves(o);
  const QuinticField field = build_field(o, load_poly(o));
  for (const auto& curve : curves) {
    const ParityCertificate c = certify(curve, field);
    for (const auto& h : c.checks)
      err << curve.label << ": " << (h.passed ? "ok   " : "FAIL ") << h.name << " (" << h.detail << ")\n";
    if (o.json) {
      out << c.to_json() << '\n';
    } else {
      out << c.curve << " over " << field.poly.to_string() << ": "
          << (c.admissible ? "admissible, chi " + std::to_string(c.chi) + ", parity " + to_string(*c.parity)
                           : std::string("not admissible"))
          << ", growth " << to_string(c.growth) << '\n';
    }
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto curves = load_curves(o);
  const std::vector<BigInt> edges = parse_buckets(o.buckets);
  if (o.fields.empty() == (o.height < 0)) throw UsageError("give exactly one of --fields and --height");

  std::unique_ptr<FieldCache> cache;
  if (!o.cache.empty()) {
    try {
      cache = std::make_unique<FieldCache>(o.cache);
    } catch (const std::exception& e) {
      throw DataError(e.what());
    }
    if (cache->corrupt_entries()) err << "cache: dropped " << cache->corrupt_entries() << " corrupt entries\n";
  }
  FieldOptions fo;
  fo.prime_budget = o.prime_budget;
  const FieldBuilder builder(fo, cache.get());

  std::vector<QuinticField> fields;
  if (!o.fields.empty()) {
    FieldFormat format = FieldFormat::Csv;
    try {
      if (!o.format.empty())
        format = parse_field_format(o.format);
      else if (std::filesystem::path(o.fields).extension() == ".jsonl")
        format = FieldFormat::Jsonl;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    IngestResult in;
    try {
      in = ingest_fields(o.fields, format, builder);
    } catch (const FieldIoError& e) {
      throw DataError(e.what());
    }
    for (const auto& e : in.errors) err << o.fields << ":" << e.line << ": " << e.reason << ": " << e.message << '\n';
    fields = std::move(in.fields);
  } else {
    EnumerationOptions eo;
    eo.height = o.height;
    eo.disc_bound = edges.back();
    EnumerationResult r = enumerate_quintics(eo, builder);
    const auto& s = r.stats;
    err << "enumerated " << s.polynomials << " polynomials: " << s.separable << " separable, " << s.within_bound
        << " within bound, " << s.certified << " certified, " << s.merged << " merged, " << r.fields.size()
        << " fields\n";
    for (const auto& a : s.audit_failures) err << "audit failure: " << a << '\n';
    fields = std::move(r.fields);
  }
  if (cache)
    err << "cache: " << builder.cache_hits() << " hits, " << builder.discriminant_computations()
        << " discriminant computations\n";

  for (const auto& curve : curves) {
    const ScanReport report = scan(curve, fields, edges);
    if (o.json) {
      out << report.to_json() << '\n';
    } else {
      out << report.curve << '\n' << "X total admissible odd proportion\n";
      for (const auto& b : report.buckets) {
        out << b.x << ' ' << b.total << ' ' << b.admissible << ' ' << b.odd << ' ';
        if (b.proportion) {
          std::ostringstream p;
          p.precision(4);
          p << std::fixed << *b.proportion;
          out << p.str();
        } else {
          out << '-';
        }
        out << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor induction, Pin covers and rank-growth parity for quintic fields", "quintrank"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON on standard output");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  auto* h2 = app.add_subcommand("h2", "Cohomology tables for S4, A4, A5 and the Pin cocycle classes");
  auto* standard = app.add_subcommand("standard-rep", "Verify the tensor-induced standard representation of S5");
  auto* analyze = app.add_subcommand("analyze-field", "Discriminant, signature, resolvent and S5 status of a quintic");
  auto* cert = app.add_subcommand("certify", "Parity certificate for a curve and a quintic");
  auto* scan_cmd = app.add_subcommand("scan", "Bucketed growth counts over a field table or an enumeration");

  for (auto* sub : {analyze, cert, scan_cmd})
    sub->add_option("--prime-budget", o.prime_budget, "Primes scanned for S5 certification")
        ->check(CLI::PositiveNumber);
  for (auto* sub : {analyze, cert}) sub->add_option("--poly", o.poly, "Coefficients a5,a4,a3,a2,a1,a0")->required();
  for (auto* sub : {cert, scan_cmd}) {
    auto* c = sub->add_option("--curve", o.curve, "Curve as `label N p^e ...`");
    auto* f = sub->add_option("--curve-file", o.curve_file, "File with one curve per line");
    c->excludes(f);
  }
  scan_cmd->add_option("--fields", o.fields, "Field table (label,a5,...,a0 rows)");
  scan_cmd->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  scan_cmd->add_option("--height", o.height, "Enumerate monic quintics with |a_i| <= H instead")
      ->check(CLI::Range(0L, 50L));
  scan_cmd->add_option("--buckets", o.buckets, "Ascending discriminant bounds X1,X2,...")->required();
  scan_cmd->add_option("--cache", o.cache, "Persistent cache of derived field data");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(o, out, err);
    if (h2->parsed()) return cmd_h2(o, out, err);
    if (standard->parsed()) return cmd_standard_rep(o, out, err);
    if (analyze->parsed()) return cmd_analyze(o, out, err);
    if (cert->parsed()) return cmd_certify(o, out, err);
    return cmd_scan(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const CacheIoError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const IncompleteData& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
}

}  // namespace quintrank::cli
