// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace killing {

/// A bijection of {1..d}. images()[k-1] holds pi(k).
///
/// Composition follows function composition: (sigma * tau)(k) = sigma(tau(k)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity on {1..d}.
  explicit Permutation(std::size_t d);
  /// From 1-based images; throws InvalidArgument unless a bijection.
  static Permutation from_images(std::vector<int> images);
  /// From cycle notation such as "(1 3)(2 4)" or "(13)(12)" on {1..d}.
  /// Cycles need not be disjoint; the product is composed right to left.
  /// Labels may be run together when each is a single digit. "e" is the identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t d);

  std::size_t degree() const { return images_.size(); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of {1..d} in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t d);

}  // namespace killing
