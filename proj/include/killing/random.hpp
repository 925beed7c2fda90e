// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "killing/scalar.hpp"
#include "killing/tensor.hpp"

namespace killing {

/// Seeded generator whose draws depend only on the seed, not on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with p uniform in [-bound, bound] and q uniform in [1, bound].
  Scalar rational(std::int64_t bound);
  /// Nonzero variant of rational().
  Scalar nonzero_rational(std::int64_t bound);
  Vector vector(std::size_t n, std::int64_t bound);
  Tensor tensor(std::size_t dim, std::size_t order, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace killing
