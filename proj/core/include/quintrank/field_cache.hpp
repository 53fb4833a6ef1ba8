#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "quintrank/quintic_field.hpp"

namespace quintrank {

class CacheIoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ChecksumMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

/// Text encoding of the derived part of a field (everything except label and polynomial).
std::string encode_derived(const QuinticField& f);
/// Inverse of encode_derived; throws std::invalid_argument on malformed text.
QuinticField decode_derived(const std::string& text, std::string label, IntPolynomial poly);

/// Append-only file of `key|record|checksum` lines. Entries whose checksum
/// does not match are dropped on load (or rejected with ChecksumMismatch in
/// strict mode) so the caller recomputes them. One writer, many readers.
class FieldCache {
public:
  explicit FieldCache(std::filesystem::path path, bool strict = false);

  std::optional<std::string> get(const std::string& key) const;
  /// Appends to the file; lines are buffered until flush() or destruction.
  void put(const std::string& key, const std::string& record);
  void flush();

  std::size_t size() const;
  std::size_t corrupt_entries() const { return corrupt_; }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  std::unordered_map<std::string, std::string> entries_;
  std::size_t corrupt_ = 0;
  std::ofstream out_;
  mutable std::shared_mutex mutex_;
};

}  // namespace quintrank
