// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "killing/linalg.hpp"
#include "killing/tensor.hpp"

namespace killing {

struct MetricSignature {
  int p = 0;
  int q = 0;
  int dim() const { return p + q; }
};

/// Diagonal ambient metric with p entries +1 followed by q entries -1.
Tensor ambient_metric(const MetricSignature& sig);
/// Its inverse (equal to itself, kept separate for readability at call sites).
Tensor ambient_metric_inverse(const MetricSignature& sig);

enum class ModelKind { Sphere, Flat };

/// Sphere: the quadric g(x,x) = 1. Flat: the hyperplane g(x,u) = 1 with g(u,u) = 1.
struct ModelSpace {
  MetricSignature signature;
  ModelKind kind = ModelKind::Sphere;
  Vector u;  // normal of the flat model, empty for spheres

  std::size_t dim() const { return static_cast<std::size_t>(signature.dim()); }
  bool flat() const { return kind == ModelKind::Flat; }
  Tensor metric() const { return ambient_metric(signature); }
  Tensor metric_inverse() const { return ambient_metric_inverse(signature); }
  std::string describe() const;
};

/// Validates and builds a sphere model. Requires N >= 2 and p >= 1.
ModelSpace make_sphere(MetricSignature sig);
/// Validates and builds a flat model; u defaults to the first standard
/// basis vector and must satisfy g(u,u) = 1.
ModelSpace make_flat(MetricSignature sig, std::optional<Vector> u = std::nullopt);

struct ModelPoint {
  Vector x;
};

struct TangentBasis {
  std::vector<Vector> vectors;
  Matrix gram;
  Matrix gram_inverse;
  std::size_t size() const { return vectors.size(); }
};

/// True when x satisfies the model's defining equation exactly.
bool on_model(const ModelSpace& model, const Vector& x);
/// True when v is tangent at x.
bool is_tangent(const ModelSpace& model, const Vector& x, const Vector& v);

/// Point for the parameter t: sphere x = ((1 - g(t,t)) e + 2t) / (1 + g(t,t))
/// with e the first standard basis vector, flat x = u + t. t must be
/// g-orthogonal to e (resp. u).
ModelPoint point_from_parameter(const ModelSpace& model, const Vector& t);
/// Random rational point, deterministic per seed. Throws SamplingFailure
/// when no admissible parameter is found.
ModelPoint sample_point(const ModelSpace& model, std::uint64_t seed);

/// N-1 standard basis vectors minus their g-projection onto x (resp. u),
/// dropping the one along which x (resp. u) has its largest component.
TangentBasis tangent_basis(const ModelSpace& model, const Vector& x);
/// Basis with the given vectors; validates tangency and independence.
TangentBasis make_tangent_basis(const ModelSpace& model, const Vector& x, std::vector<Vector> vectors);

/// g^{ab} for spheres, g^{ab} - u^a u^b for the flat model.
Tensor gbar(const ModelSpace& model);

}  // namespace killing
