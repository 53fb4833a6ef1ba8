#include "quintrank/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace quintrank {

Subgroup::Subgroup(const FiniteGroup& g, std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) throw std::invalid_argument("Subgroup: identity missing");
  index_.assign(g.order(), -1);
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] >= g.order()) throw std::invalid_argument("Subgroup: label out of range");
    index_[members_[k]] = static_cast<long>(k);
  }
  for (Element a : members_)
    for (Element b : members_)
      if (!contains(g.mul(a, b))) throw std::invalid_argument("Subgroup: set is not closed");
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element b = g.mul(a, s);
      if (in[b]) continue;
      in[b] = 1;
      members.push_back(b);
      queue.push_back(b);
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = static_cast<Element>(a);
  return Subgroup(g, std::move(all));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element s : g.generators())
    for (Element x : h.elements())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

FiniteGroup induced_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = h.order();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>(h.index_of(g.mul(h.elements()[i], h.elements()[j])));
  // Greedy generating set: add elements until the span is everything.
  std::vector<Element> gens;
  std::vector<Element> parent_gens;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const Element x = h.elements()[i];
    if (covered[x]) continue;
    parent_gens.push_back(x);
    gens.push_back(static_cast<Element>(i));
    const auto span = generated_subgroup(g, parent_gens);
    for (Element y : span.elements()) covered[y] = 1;
    if (span.order() == n) break;
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(gens));
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> proj(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element a = 0; a < g.order(); ++a) {
    if (proj[a] != kUnset) continue;
    const auto label = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element x : n.elements()) proj[g.mul(a, x)] = label;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = proj[g.mul(reps[i], reps[j])];
  std::vector<Element> gens;
  for (Element s : g.generators()) {
    const Element q = proj[s];
    if (q != 0 && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  return {FiniteGroup::from_table(m, std::move(table), std::move(gens)), std::move(proj)};
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g1.mul(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
      const auto b = g2.mul(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
      table[x * n + y] = static_cast<Element>(a * n2 + b);
    }
  std::vector<Element> gens;
  for (Element s : g1.generators()) gens.push_back(static_cast<Element>(s * n2));
  for (Element s : g2.generators()) gens.push_back(s);
  return FiniteGroup::from_table(n, std::move(table), std::move(gens));
}

Subgroup preimage(const FiniteGroup& g, const std::vector<Element>& projection, const Subgroup& target) {
  std::vector<Element> members;
  for (Element a = 0; a < g.order(); ++a)
    if (target.contains(projection.at(a))) members.push_back(a);
  return Subgroup(g, std::move(members));
}

Closure<Permutation> permutation_group(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("permutation_group: no generators");
  auto key = [](const Permutation& p) {
    return ElementKey(p.images().begin(), p.images().end());
  };
  return close_generators(gens, Permutation::identity(gens.front().degree()),
                          [](const Permutation& a, const Permutation& b) { return a * b; }, key);
}

Closure<Permutation> symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return permutation_group({Permutation::identity(1)});
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return permutation_group({Permutation::transposition(n, 0, 1), Permutation(cycle)});
}

Subgroup even_subgroup(const Closure<Permutation>& sym) {
  std::vector<Element> even;
  for (std::size_t a = 0; a < sym.elements.size(); ++a)
    if (sym.elements[a].sign() == 1) even.push_back(static_cast<Element>(a));
  return Subgroup(sym.group, std::move(even));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(n, std::move(table), std::move(gens));
}

Closure<Permutation> dihedral_group(int n) {
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return permutation_group({Permutation(rot), Permutation(refl)});
}

std::optional<Element> find_label(const Closure<Permutation>& c, const Permutation& p) {
  for (std::size_t a = 0; a < c.elements.size(); ++a)
    if (c.elements[a] == p) return static_cast<Element>(a);
  return std::nullopt;
}

}  // namespace quintrank
