#include "quintrank/field_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace quintrank {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string opt_prime(const std::optional<std::uint64_t>& p) { return p ? std::to_string(*p) : "-"; }

std::optional<std::uint64_t> parse_opt_prime(const std::string& s) {
  if (s == "-") return std::nullopt;
  return std::stoull(s);
}

}  // namespace

std::string encode_derived(const QuinticField& f) {
  std::ostringstream out;
  out << f.disc.get_str() << ' ' << f.r1 << ' ' << f.r2 << ' ' << f.resolvent.squarefree_kernel.get_str() << ' '
      << f.resolvent.fundamental_disc.get_str() << ' ' << f.resolvent.complete << ' ' << f.resolvent.degenerate << ' '
      << to_string(f.s5.status) << ' ' << opt_prime(f.s5.five_cycle_prime) << ' '
      << opt_prime(f.s5.transposition_prime) << ' ' << f.s5.primes_scanned << ' ' << f.fingerprint;
  return out.str();
}

QuinticField decode_derived(const std::string& text, std::string label, IntPolynomial poly) {
  std::istringstream in(text);
  std::string disc, kernel, fund, status, five, transp, fp;
  QuinticField q;
  int complete = 0, degenerate = 0;
  if (!(in >> disc >> q.r1 >> q.r2 >> kernel >> fund >> complete >> degenerate >> status >> five >> transp >>
        q.s5.primes_scanned >> fp))
    throw std::invalid_argument("decode_derived: truncated record");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("decode_derived: trailing data");
  if (q.disc.set_str(disc, 10) || q.resolvent.squarefree_kernel.set_str(kernel, 10) ||
      q.resolvent.fundamental_disc.set_str(fund, 10))
    throw std::invalid_argument("decode_derived: bad integer");
  if (status != "Certified" && status != "Inconclusive") throw std::invalid_argument("decode_derived: bad status");
  try {
    q.s5.five_cycle_prime = parse_opt_prime(five);
    q.s5.transposition_prime = parse_opt_prime(transp);
  } catch (const std::exception&) {
    throw std::invalid_argument("decode_derived: bad witness prime");
  }
  q.label = std::move(label);
  q.poly = std::move(poly);
  q.resolvent.disc = q.disc;
  q.resolvent.complete = complete != 0;
  q.resolvent.degenerate = degenerate != 0;
  q.s5.status = status == "Certified" ? S5Status::Certified : S5Status::Inconclusive;
  q.fingerprint = std::move(fp);
  return q;
}

FieldCache::FieldCache(std::filesystem::path path, bool strict) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) {
    std::ofstream create(path_, std::ios::app);
    if (!create) throw CacheIoError("cannot create cache file " + path_.string());
    return;
  }
  std::ifstream in(path_);
  if (!in) throw CacheIoError("cannot read cache file " + path_.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto a = line.find('|');
    const auto b = line.rfind('|');
    bool ok = a != std::string::npos && b != a;
    if (ok) {
      const std::string body = line.substr(0, b);
      ok = hex64(fnv1a(body)) == line.substr(b + 1);
      if (ok) {
        entries_[line.substr(0, a)] = line.substr(a + 1, b - a - 1);
        continue;
      }
    }
    if (strict) throw ChecksumMismatch("cache line " + std::to_string(lineno) + " of " + path_.string() + " is corrupt");
    ++corrupt_;
  }
}

std::optional<std::string> FieldCache::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FieldCache::put(const std::string& key, const std::string& record) {
  if (key.find('|') != std::string::npos || record.find('|') != std::string::npos ||
      key.find('\n') != std::string::npos || record.find('\n') != std::string::npos)
    throw std::invalid_argument("FieldCache::put: key and record must not contain '|' or newlines");
  std::unique_lock lock(mutex_);
  const auto it = entries_.find(key);
  if (it != entries_.end() && it->second == record) return;
  const std::string body = key + "|" + record;
  if (!out_.is_open()) {
    out_.open(path_, std::ios::app);
    if (!out_) throw CacheIoError("cannot append to cache file " + path_.string());
  }
  out_ << body << '|' << hex64(fnv1a(body)) << '\n';
  if (!out_) throw CacheIoError("write to cache file " + path_.string() + " failed");
  entries_[key] = record;
}

void FieldCache::flush() {
  std::unique_lock lock(mutex_);
  if (out_.is_open()) out_.flush();
}

std::size_t FieldCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace quintrank
