#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace quintrank {

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// The product `a * b` is function composition: (a * b)(i) = a(b(i)).
/// Right actions (as used for coset permutations) compose with `then`.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds a permutation of degree n from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  int fixed_points() const;
  /// Cycle lengths (including fixed points), sorted ascending.
  std::vector<int> cycle_type() const;
  std::size_t order() const;

  /// Transpositions t_1, ..., t_k with *this == t_1 * t_2 * ... * t_k, produced by
  /// selection sort of the image array. Each pair is returned as (i, j) with i < j.
  std::vector<std::pair<int, int>> transposition_factorization() const;

  /// Cycle notation, e.g. "(0 1)(2 3 4)"; "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<int> images_;
};

/// Right-action composition: i^(then(a, b)) = (i^a)^b, i.e. then(a, b) == b * a.
Permutation then(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace quintrank
