#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quintrank {

/// Dense element label; the identity is always label 0.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10'000;

class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeded order cap " + std::to_string(cap)) {}
};

class InvalidGroupTable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by a complete multiplication table.
///
/// Copies share the immutable table. Element labels are 0..order-1, the
/// identity is 0, and `generators()` generate the whole group.
class FiniteGroup {
public:
  /// The trivial group.
  FiniteGroup();

  /// Validates and adopts a row-major table (table[a * order + b] == a * b).
  /// Checks identity at label 0, Latin-square rows and columns, associativity
  /// against the generators, and that the generators reach every element.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<Element> generators);

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const;
  Element pow(Element a, long long k) const;
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::span<const Element> generators() const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  /// Conjugacy class id per element; classes are numbered in order of their
  /// smallest member.
  std::span<const std::size_t> conjugacy_classes() const;
  std::size_t class_count() const;

  /// Shortest word in generator indices for each element (breadth-first from
  /// the identity, right multiplication by generators).
  const std::vector<std::vector<std::size_t>>& words() const;

  /// `label: word` per element, then the table as whitespace-separated rows.
  std::string dump() const;

private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d);

  std::shared_ptr<const Data> data_;
  const Element* table_ = nullptr;
  std::size_t order_ = 1;
};

/// Closure of concrete generators; elements[label] is the element behind each label.
template <class T>
struct Closure {
  FiniteGroup group;
  std::vector<T> elements;
};

using ElementKey = std::vector<std::int64_t>;

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Breadth-first closure of `gens` under `mul`, starting from `identity`.
/// `key` maps an element to an ElementKey deciding equality (exact images
/// for permutations, a rounded encoding for floating-point models).
/// Throws CapExceeded if more than `cap` elements appear.
template <class T, class Mul, class Key>
Closure<T> close_generators(const std::vector<T>& gens, const T& identity, Mul mul, Key key,
                            std::size_t cap = kDefaultOrderCap) {
  std::vector<T> elems{identity};
  std::unordered_map<ElementKey, Element, ElementKeyHash> index{{key(identity), 0}};
  std::vector<Element> gen_labels;
  // right[a * ngens + s] == a * gens[s]
  std::vector<Element> right;
  std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};

  auto intern = [&](T value, Element from, std::size_t via) -> Element {
    auto k = key(value);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (elems.size() >= cap) throw CapExceeded(cap);
    const auto label = static_cast<Element>(elems.size());
    index.emplace(std::move(k), label);
    elems.push_back(std::move(value));
    parent.emplace_back(from, via);
    return label;
  };

  const std::size_t ngens = gens.size();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t s = 0; s < ngens; ++s) {
      T prod = mul(elems[a], gens[s]);
      right.push_back(intern(std::move(prod), static_cast<Element>(a), s));
    }
  }
  for (std::size_t s = 0; s < ngens; ++s) gen_labels.push_back(right[s]);

  // a * b, built along b's breadth-first parent chain: b = parent(b) * gens[s].
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const auto [pb, s] = parent[b];
    for (std::size_t a = 0; a < n; ++a)
      table[a * n + b] = right[static_cast<std::size_t>(table[a * n + pb]) * ngens + s];
  }

  // Drop repeated or trivial generator labels while keeping order.
  std::vector<Element> gens_out;
  for (Element g : gen_labels)
    if (g != 0 && std::find(gens_out.begin(), gens_out.end(), g) == gens_out.end()) gens_out.push_back(g);

  return {FiniteGroup::from_table(n, std::move(table), std::move(gens_out)), std::move(elems)};
}

}  // namespace quintrank
