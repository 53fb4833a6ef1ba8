#include "quintrank/cosets.hpp"

#include <stdexcept>

namespace quintrank {

namespace {
constexpr std::size_t kNoCoset = static_cast<std::size_t>(-1);
}

CosetSystem::CosetSystem(FiniteGroup g, Subgroup q) : group_(std::move(g)), subgroup_(std::move(q)) {
  coset_of_.assign(group_.order(), kNoCoset);
  for (Element x = 0; x < group_.order(); ++x) {
    if (coset_of_[x] != kNoCoset) continue;
    const std::size_t i = reps_.size();
    reps_.push_back(x);
    for (Element y : subgroup_.elements()) coset_of_[group_.mul(y, x)] = i;
  }
}

CosetSystem::CosetSystem(FiniteGroup g, Subgroup q, std::vector<Element> reps)
    : group_(std::move(g)), subgroup_(std::move(q)), reps_(std::move(reps)) {
  coset_of_.assign(group_.order(), kNoCoset);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (Element y : subgroup_.elements()) {
      const Element x = group_.mul(y, reps_[i]);
      if (coset_of_[x] != kNoCoset) throw std::invalid_argument("CosetSystem: two representatives share a coset");
      coset_of_[x] = i;
    }
  }
  for (auto c : coset_of_)
    if (c == kNoCoset) throw std::invalid_argument("CosetSystem: representatives miss a coset");
}

CosetFactor coset_factorization(const CosetSystem& cs, Element g) {
  const FiniteGroup& grp = cs.group();
  const std::size_t n = cs.index();
  std::vector<int> images(n);
  CosetFactor out;
  out.q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = grp.mul(cs.rep(i), g);
    const std::size_t j = cs.coset_of(x);
    images[i] = static_cast<int>(j);
    out.q[i] = grp.mul(x, grp.inv(cs.rep(j)));
  }
  out.pi = Permutation(std::move(images));
  return out;
}

TransferMap::TransferMap(const CosetSystem& cs)
    : group_(cs.group()),
      g_ab_(abelianization(cs.group())),
      q_ab_(abelianization(induced_group(cs.group(), cs.subgroup()))) {
  const auto& factors = q_ab_.factors();
  values_.resize(group_.order());
  for (Element g = 0; g < group_.order(); ++g) {
    std::vector<std::uint64_t> sum(factors.size(), 0);
    for (Element qi : coset_factorization(cs, g).q) {
      const auto& c = q_ab_.coordinates(static_cast<Element>(cs.subgroup().index_of(qi)));
      for (std::size_t t = 0; t < factors.size(); ++t) sum[t] = (sum[t] + c[t]) % factors[t];
    }
    values_[g] = std::move(sum);
  }
}

std::vector<std::uint64_t> TransferMap::on_abelianization() const {
  constexpr auto kUnset = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> map(g_ab_.order(), kUnset);
  for (Element g = 0; g < group_.order(); ++g) {
    const auto src = g_ab_.label(g);
    const auto dst = q_ab_.label_of(values_[g]);
    if (map[src] == kUnset)
      map[src] = dst;
    else if (map[src] != dst)
      throw std::logic_error("transfer is not constant on commutator cosets");
  }
  return map;
}

bool TransferMap::is_homomorphism() const {
  const auto& factors = q_ab_.factors();
  for (Element g = 0; g < group_.order(); ++g)
    for (Element h = 0; h < group_.order(); ++h) {
      const auto& a = values_[g];
      const auto& b = values_[h];
      const auto& c = values_[group_.mul(g, h)];
      for (std::size_t t = 0; t < factors.size(); ++t)
        if ((a[t] + b[t]) % factors[t] != c[t]) return false;
    }
  return true;
}

bool TransferMap::is_trivial() const {
  for (const auto& v : values_)
    for (auto c : v)
      if (c != 0) return false;
  return true;
}

}  // namespace quintrank
