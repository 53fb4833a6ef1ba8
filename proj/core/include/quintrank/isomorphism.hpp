#pragma once

#include <optional>
#include <vector>

#include "quintrank/finite_group.hpp"

namespace quintrank {

/// A small generating set chosen greedily: elements of largest order first,
/// each kept only if it enlarges the subgroup generated so far.
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// An isomorphism G1 -> G2 as a label map (phi[x] is the image of x), or
/// nullopt if none exists. Generator images are searched by backtracking over
/// candidates with matching element order and conjugacy class size, in label
/// order, so the result is deterministic.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2);

/// True if phi is a bijective homomorphism G1 -> G2.
bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Element>& phi);

}  // namespace quintrank
