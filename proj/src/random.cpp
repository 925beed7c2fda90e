// SPDX-License-Identifier: Apache-2.0
#include "killing/random.hpp"

#include "killing/errors.hpp"

namespace killing {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range for uniform draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Scalar Rng::rational(std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("rational bound must be positive");
  const auto p = uniform(-bound, bound);
  const auto q = uniform(1, bound);
  Scalar r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

Scalar Rng::nonzero_rational(std::int64_t bound) {
  Scalar r;
  do {
    r = rational(bound);
  } while (is_zero(r));
  return r;
}

Vector Rng::vector(std::size_t n, std::int64_t bound) {
  Vector v(n);
  for (auto& x : v) x = rational(bound);
  return v;
}

Tensor Rng::tensor(std::size_t dim, std::size_t order, std::int64_t bound) {
  Tensor t(dim, order);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = rational(bound);
  return t;
}

}  // namespace killing
