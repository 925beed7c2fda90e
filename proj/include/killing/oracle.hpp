// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "killing/curvature.hpp"
#include "killing/linalg.hpp"
#include "killing/models.hpp"
#include "killing/tensor.hpp"

namespace killing {

/// Frame data of the Killing tensor of S at one model point. Greek indices
/// run over the tangent basis.
struct PointFrameData {
  ModelPoint x;
  TangentBasis basis;
  /// K_{ab} = S(x, x, e_a, e_b).
  Matrix k;
  Matrix gram;
  Matrix gram_inverse;
  /// Nbar_{abc} = gbar^{pq} (S_{p a2 b1 b2} S_{q c2 d1 d2} + S_{p c2 b1 b2} S_{q d1 a2 d2})
  ///              x^{b1} x^{b2} x^{d1} e_a^{a2} e_b^{c2} e_c^{d2}, all slots lowered.
  Tensor nbar;
};

/// Throws InvalidArgument when x is off the model or the basis is not a
/// tangent basis at x.
PointFrameData compute_point_data(const SymCurvatureTensor& s, const ModelSpace& model, const ModelPoint& x,
                                  const TangentBasis& basis);

/// The three Nijenhuis integrability residuals at a point, each an order-3
/// tensor totally antisymmetric in its lowered frame slots.
struct TnsResiduals {
  std::array<Tensor, 3> residual;
};

/// With N_{abc} = Nbar_{abc} - Nbar_{acb}:
///   residual 1 = Alt_{abc} N_{abc}
///   residual 2 = Alt_{abc} K_{ad} g^{de} N_{ebc}
///   residual 3 = Alt_{abc} K_{ad} g^{de} K_{ef} g^{fh} N_{hbc}
/// Alt is the unnormalized signed sum.
TnsResiduals tns_residuals(const PointFrameData& data);

struct PointResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  ModelPoint x;
  std::array<std::size_t, 3> support{};
};

struct OracleReport {
  std::array<bool, 3> passes{true, true, true};
  /// First point index at which each condition fails.
  std::array<std::optional<std::size_t>, 3> witness;
  std::vector<PointResult> points;
  double seconds = 0.0;

  bool integrable() const { return passes[0] && passes[1] && passes[2]; }
};

/// Seed of the k-th sample point of an oracle run.
std::uint64_t oracle_point_seed(std::uint64_t seed, std::size_t k);

/// Samples num_points rational points (deterministic per seed) with their
/// standard tangent bases. Throws InvalidArgument for num_points == 0 and
/// propagates SamplingFailure.
OracleReport integrable_oracle(const SymCurvatureTensor& s, const ModelSpace& model, std::size_t num_points,
                               std::uint64_t seed);

}  // namespace killing
