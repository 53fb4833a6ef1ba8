#include "quintrank/finite_group.hpp"

#include <deque>
#include <numeric>
#include <sstream>

namespace quintrank {

struct FiniteGroup::Data {
  std::size_t order = 1;
  std::vector<Element> table{0};
  std::vector<Element> inverse{0};
  std::vector<Element> generators;
  std::vector<std::size_t> element_orders{1};
  std::vector<std::vector<std::size_t>> words{{}};
  std::vector<std::size_t> classes{0};
  std::size_t class_count = 1;
};

FiniteGroup::FiniteGroup() : FiniteGroup(std::make_shared<const Data>()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> d)
    : data_(std::move(d)), table_(data_->table.data()), order_(data_->order) {}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<Element> generators) {
  if (order == 0) throw InvalidGroupTable("group order must be positive");
  if (table.size() != order * order) throw InvalidGroupTable("table size is not order^2");
  for (Element g : generators)
    if (g >= order) throw InvalidGroupTable("generator label out of range");

  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(table);
  d->generators = std::move(generators);
  const auto& t = d->table;
  auto at = [&](std::size_t a, std::size_t b) { return t[a * order + b]; };

  for (std::size_t a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) throw InvalidGroupTable("label 0 is not a two-sided identity");
  }
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      const auto v = at(a, b);
      if (v >= order || seen[v]) throw InvalidGroupTable("table row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      const auto v = at(b, a);
      if (seen[v]) throw InvalidGroupTable("table column is not a permutation");
      seen[v] = 1;
    }
  }

  d->inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (at(a, b) == 0) d->inverse[a] = static_cast<Element>(b);
  for (std::size_t a = 0; a < order; ++a)
    if (at(d->inverse[a], a) != 0) throw InvalidGroupTable("left and right inverses differ");

  // Generated elements, shortest words.
  d->words.assign(order, {});
  std::vector<char> reached(order, 0);
  reached[0] = 1;
  std::deque<Element> queue{0};
  std::size_t count = 1;
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < d->generators.size(); ++s) {
      const Element b = at(a, d->generators[s]);
      if (reached[b]) continue;
      reached[b] = 1;
      ++count;
      d->words[b] = d->words[a];
      d->words[b].push_back(s);
      queue.push_back(b);
    }
  }
  if (count != order) throw InvalidGroupTable("generators do not generate the table");

  // (xy)s == x(ys) for generators s forces associativity once every element is
  // a positive word in the generators.
  for (Element s : d->generators)
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        if (at(at(x, y), s) != at(x, at(y, s))) throw InvalidGroupTable("table is not associative");

  d->element_orders.assign(order, 1);
  for (std::size_t a = 1; a < order; ++a) {
    std::size_t k = 1;
    for (Element p = static_cast<Element>(a); p != 0; p = at(p, a)) ++k;
    d->element_orders[a] = k;
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  d->classes.assign(order, kUnset);
  d->class_count = 0;
  for (std::size_t x = 0; x < order; ++x) {
    if (d->classes[x] != kUnset) continue;
    const std::size_t id = d->class_count++;
    for (std::size_t g = 0; g < order; ++g) d->classes[at(at(g, x), d->inverse[g])] = id;
  }

  return FiniteGroup(std::move(d));
}

Element FiniteGroup::inv(Element a) const { return data_->inverse[a]; }

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<long long>(element_order(a));
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::span<const Element> FiniteGroup::generators() const { return data_->generators; }

std::size_t FiniteGroup::element_order(Element a) const { return data_->element_orders[a]; }

bool FiniteGroup::is_abelian() const {
  for (Element a : generators())
    for (Element b : generators())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::span<const std::size_t> FiniteGroup::conjugacy_classes() const { return data_->classes; }

std::size_t FiniteGroup::class_count() const { return data_->class_count; }

const std::vector<std::vector<std::size_t>>& FiniteGroup::words() const { return data_->words; }

std::string FiniteGroup::dump() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < order(); ++a) {
    os << a << ':';
    if (data_->words[a].empty()) os << " e";
    for (auto s : data_->words[a]) os << " g" << s;
    os << '\n';
  }
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (b) os << ' ';
      os << mul(static_cast<Element>(a), static_cast<Element>(b));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace quintrank
