#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintrank/quintic_field.hpp"
#include "quintrank/rankgrowth.hpp"

namespace quintrank {

enum class FieldFormat { Csv, Jsonl };
/// "csv" or "jsonl"; throws std::invalid_argument otherwise.
FieldFormat parse_field_format(const std::string& name);

class FieldIoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RowError {
  std::size_t line = 0;
  std::string reason;  // Parse, NotQuintic, NotMonic or NotSeparable
  std::string message;
};

struct IngestResult {
  std::vector<QuinticField> fields;
  std::vector<RowError> errors;
};

/// Reads `label,a5,a4,a3,a2,a1,a0` rows (CSV, '#' comments and a header line
/// starting with "label" are skipped) or JSONL objects {"label": ..,
/// "coeffs": [a5, .., a0]}. Bad rows are reported with their line number and
/// skipped. Throws FieldIoError if the file cannot be read.
IngestResult ingest_fields(const std::filesystem::path& path, FieldFormat format, const FieldBuilder& builder);

struct EnumerationOptions {
  long height = 1;
  BigInt disc_bound = 10'000;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t audit_primes = 30;
};

struct EnumerationStats {
  std::size_t polynomials = 0;
  std::size_t separable = 0;
  std::size_t within_bound = 0;
  std::size_t certified = 0;
  std::size_t merged = 0;           // polynomials folded into an existing field
  std::size_t audit_comparisons = 0;
  std::vector<std::string> audit_failures;  // "label vs label" pairs split apart
};

struct EnumerationResult {
  std::vector<QuinticField> fields;  // ordered by (|disc|, coefficients)
  EnumerationStats stats;
};

/// All monic quintics with |a_i| <= height, kept when separable, |disc| <=
/// disc_bound and S_5 certified, then grouped by fingerprint. Each group is
/// represented by its member of smallest |disc| (ties: lexicographically
/// smallest coefficients). Every other member is compared with the
/// representative at `audit_primes` further good primes; a disagreement is
/// reported and the member kept as a separate field.
EnumerationResult enumerate_quintics(const EnumerationOptions& options, const FieldBuilder& builder);

struct ScanBucket {
  BigInt x;
  std::size_t total = 0;
  std::size_t admissible = 0;
  std::size_t odd = 0;
  std::optional<double> proportion;  // odd / admissible once admissible >= min_samples
};

struct ScanReport {
  std::string curve;
  std::vector<ScanBucket> buckets;

  std::string to_json(int indent = -1) const;
};

/// Cumulative counts of fields with |disc| <= X for each edge X (ascending).
ScanReport scan(const CurveData& curve, const std::vector<QuinticField>& fields, const std::vector<BigInt>& edges,
                std::size_t min_samples = 200);

}  // namespace quintrank
