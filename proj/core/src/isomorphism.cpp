#include "quintrank/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quintrank/subgroup.hpp"

namespace quintrank {

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> order(g.order());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  std::size_t count = 1;
  for (Element x : order) {
    if (count == g.order()) break;
    if (covered[x]) continue;
    gens.push_back(x);
    const Subgroup h = generated_subgroup(g, gens);
    for (Element y : h.elements()) covered[y] = 1;
    count = h.order();
  }
  return gens;
}

namespace {

struct Invariants {
  std::vector<std::size_t> order;
  std::vector<std::size_t> class_size;
};

Invariants invariants(const FiniteGroup& g) {
  Invariants inv{std::vector<std::size_t>(g.order()), std::vector<std::size_t>(g.order())};
  std::vector<std::size_t> sizes(g.class_count(), 0);
  for (auto c : g.conjugacy_classes()) ++sizes[c];
  for (Element x = 0; x < g.order(); ++x) {
    inv.order[x] = g.element_order(x);
    inv.class_size[x] = sizes[g.conjugacy_classes()[x]];
  }
  return inv;
}

// Spreads generator images over G1 along right multiplication; nullopt on a
// clash or if the map is not injective.
std::optional<std::vector<Element>> extend(const FiniteGroup& g1, const FiniteGroup& g2,
                                           const std::vector<Element>& gens,
                                           const std::vector<Element>& images) {
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> phi(g1.order(), kUnset);
  std::vector<char> used(g2.order(), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element b = g1.mul(a, gens[s]);
      const Element img = g2.mul(phi[a], images[s]);
      if (phi[b] == kUnset) {
        if (used[img]) return std::nullopt;
        phi[b] = img;
        used[img] = 1;
        queue.push_back(b);
      } else if (phi[b] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g1.order()) return std::nullopt;
  return phi;
}

}  // namespace

bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Element>& phi) {
  if (g1.order() != g2.order() || phi.size() != g1.order()) return false;
  std::vector<char> hit(g2.order(), 0);
  for (Element x : phi) {
    if (x >= g2.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (Element a = 0; a < g1.order(); ++a)
    for (Element b = 0; b < g1.order(); ++b)
      if (phi[g1.mul(a, b)] != g2.mul(phi[a], phi[b])) return false;
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  const Invariants i1 = invariants(g1), i2 = invariants(g2);
  // Census of (order, class size) must agree.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> c1, c2;
  for (Element x = 0; x < g1.order(); ++x) {
    ++c1[{i1.order[x], i1.class_size[x]}];
    ++c2[{i2.order[x], i2.class_size[x]}];
  }
  if (c1 != c2) return std::nullopt;

  const std::vector<Element> gens = greedy_generators(g1);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element y = 0; y < g2.order(); ++y)
      if (i2.order[y] == i1.order[gens[k]] && i2.class_size[y] == i1.class_size[gens[k]])
        candidates[k].push_back(y);

  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;
  // Depth-first over generator images; the full check happens at the leaves.
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      found = extend(g1, g2, gens, images);
      return found.has_value();
    }
    for (Element y : candidates[k]) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace quintrank
