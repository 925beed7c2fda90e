// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "killing/curvature.hpp"
#include "killing/models.hpp"

namespace killing::testing {

struct Fixture {
  std::string name;
  CurvatureTensor r;
  bool structured = true;
};

inline std::vector<ModelSpace> fixture_models(int n) {
  return {make_sphere({n, 0}), make_sphere({n - 1, 1}), make_flat({n, 0})};
}

/// Metric, Benenti, non-flat family and random tensors on one model. The
/// family is only listed for curved models.
inline std::vector<Fixture> fixtures(const ModelSpace& model, std::size_t per_kind, std::uint64_t seed) {
  const std::size_t n = model.dim();
  std::vector<Fixture> out;
  out.push_back({"metric", metric_rep(model)});
  for (std::size_t k = 0; k < per_kind; ++k) {
    const std::uint64_t s = seed + 101 * k;
    out.push_back({"benenti#" + std::to_string(k), benenti_rep(random_invertible(n, s), model)});
    if (!model.flat()) {
      const SymmetricForm h = random_symmetric_form(n, s + 1);
      out.push_back({"family#" + std::to_string(k),
                     family_rep(h, Scalar(static_cast<long>(k % 3) - 1), Scalar(static_cast<long>(k + 1), 2),
                                Scalar(2 - static_cast<long>(k % 4)), model.metric())});
    }
    out.push_back({"random#" + std::to_string(k), random_curvature(n, s + 2), false});
  }
  return out;
}

}  // namespace killing::testing
