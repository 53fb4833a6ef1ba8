#include "quintrank/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quintrank {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  for (const auto& cycle : cycles) {
    std::vector<int> c(cycle);
    for (std::size_t k = 0; k < c.size(); ++k)
      im.at(static_cast<std::size_t>(c[k])) = c[(k + 1) % c.size()];
  }
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.images_.at(static_cast<std::size_t>(i)), p.images_.at(static_cast<std::size_t>(j)));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i)) ++count;
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<std::size_t>(len));
  return o;
}

std::vector<std::pair<int, int>> Permutation::transposition_factorization() const {
  // Left-multiply by swaps until the image array is sorted; the swaps, read in
  // order, compose back to *this.
  std::vector<std::pair<int, int>> out;
  std::vector<int> cur = images_;
  std::vector<int> where(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) where[static_cast<std::size_t>(cur[i])] = static_cast<int>(i);
  for (int i = 0; i < degree(); ++i) {
    const int j = cur[static_cast<std::size_t>(i)];
    if (j == i) continue;
    // (i j) o cur swaps the values i and j in the image array.
    const int pos_i = where[static_cast<std::size_t>(i)];
    cur[static_cast<std::size_t>(i)] = i;
    cur[static_cast<std::size_t>(pos_i)] = j;
    where[static_cast<std::size_t>(i)] = i;
    where[static_cast<std::size_t>(j)] = pos_i;
    out.emplace_back(i, j);
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> im(a.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation then(const Permutation& a, const Permutation& b) { return b * a; }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace quintrank
