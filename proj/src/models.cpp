// SPDX-License-Identifier: Apache-2.0
#include "killing/models.hpp"

#include "killing/errors.hpp"
#include "killing/random.hpp"

namespace killing {

namespace {

void validate_signature(const MetricSignature& sig) {
  if (sig.p < 0 || sig.q < 0) throw InvalidArgument("signature entries must be non-negative");
  if (sig.dim() < 2) throw InvalidArgument("models need ambient dimension N >= 2");
}

Vector unit(std::size_t n, std::size_t k) {
  Vector e(n, Scalar(0));
  e[k] = 1;
  return e;
}

const Vector& base_vector(const ModelSpace& model, const Vector& x) { return model.flat() ? model.u : x; }

}  // namespace

Tensor ambient_metric(const MetricSignature& sig) {
  validate_signature(sig);
  const auto n = static_cast<std::size_t>(sig.dim());
  Tensor g(n, 2);
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = static_cast<int>(i) < sig.p ? 1 : -1;
  return g;
}

Tensor ambient_metric_inverse(const MetricSignature& sig) { return ambient_metric(sig); }

std::string ModelSpace::describe() const {
  std::string s = flat() ? "flat" : "sphere";
  s += " N=" + std::to_string(dim()) + " signature=(" + std::to_string(signature.p) + "," +
       std::to_string(signature.q) + ")";
  return s;
}

ModelSpace make_sphere(MetricSignature sig) {
  validate_signature(sig);
  if (sig.p < 1) throw InvalidArgument("the sphere g(x,x)=1 needs at least one positive direction");
  ModelSpace m;
  m.signature = sig;
  m.kind = ModelKind::Sphere;
  return m;
}

ModelSpace make_flat(MetricSignature sig, std::optional<Vector> u) {
  validate_signature(sig);
  const auto n = static_cast<std::size_t>(sig.dim());
  ModelSpace m;
  m.signature = sig;
  m.kind = ModelKind::Flat;
  m.u = u ? *u : unit(n, 0);
  if (m.u.size() != n) throw InvalidArgument("normal u has the wrong length");
  if (bilinear(m.metric(), m.u, m.u) != 1) throw InvalidArgument("normal u must satisfy g(u,u) = 1");
  return m;
}

bool on_model(const ModelSpace& model, const Vector& x) {
  if (x.size() != model.dim()) return false;
  const Tensor g = model.metric();
  return model.flat() ? bilinear(g, x, model.u) == 1 : bilinear(g, x, x) == 1;
}

bool is_tangent(const ModelSpace& model, const Vector& x, const Vector& v) {
  if (v.size() != model.dim()) return false;
  return is_zero(bilinear(model.metric(), v, base_vector(model, x)));
}

ModelPoint point_from_parameter(const ModelSpace& model, const Vector& t) {
  const std::size_t n = model.dim();
  if (t.size() != n) throw InvalidArgument("parameter has the wrong length");
  const Tensor g = model.metric();
  if (model.flat()) {
    if (!is_zero(bilinear(g, t, model.u))) throw InvalidArgument("flat parameter must be g-orthogonal to u");
    Vector x = model.u;
    for (std::size_t i = 0; i < n; ++i) x[i] += t[i];
    return {x};
  }
  const Vector e = unit(n, 0);
  if (!is_zero(bilinear(g, t, e))) throw InvalidArgument("sphere parameter must be g-orthogonal to e1");
  const Scalar s = bilinear(g, t, t);
  if (s == -1) throw InvalidArgument("sphere parameter with g(t,t) = -1");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ((1 - s) * e[i] + 2 * t[i]) / (1 + s);
  return {x};
}

ModelPoint sample_point(const ModelSpace& model, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = model.dim();
  const Tensor g = model.metric();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector t = rng.vector(n, 4);
    if (model.flat()) {
      const Scalar c = bilinear(g, t, model.u);
      for (std::size_t i = 0; i < n; ++i) t[i] -= c * model.u[i];
      return point_from_parameter(model, t);
    }
    t[0] = 0;
    if (bilinear(g, t, t) == -1) continue;
    return point_from_parameter(model, t);
  }
  throw SamplingFailure("could not sample an admissible point on " + model.describe());
}

TangentBasis make_tangent_basis(const ModelSpace& model, const Vector& x, std::vector<Vector> vectors) {
  const std::size_t n = model.dim();
  if (vectors.size() + 1 != n) throw InvalidArgument("tangent basis needs N-1 vectors");
  const Tensor g = model.metric();
  TangentBasis b;
  b.vectors = std::move(vectors);
  for (const auto& v : b.vectors) {
    if (!is_tangent(model, x, v)) throw InvalidArgument("basis vector is not tangent");
  }
  b.gram = Matrix(n - 1, n - 1);
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t c = 0; c + 1 < n; ++c) b.gram(a, c) = bilinear(g, b.vectors[a], b.vectors[c]);
  b.gram_inverse = inverse(b.gram);
  return b;
}

TangentBasis tangent_basis(const ModelSpace& model, const Vector& x) {
  if (!on_model(model, x)) throw InvalidArgument("point is not on the model");
  const std::size_t n = model.dim();
  const Tensor g = model.metric();
  const Vector& base = base_vector(model, x);
  const Scalar norm = bilinear(g, base, base);
  std::size_t drop = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (abs(base[k]) > abs(base[drop])) drop = k;
  }
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == drop) continue;
    Vector v = unit(n, k);
    const Scalar c = bilinear(g, v, base) / norm;
    for (std::size_t i = 0; i < n; ++i) v[i] -= c * base[i];
    vectors.push_back(std::move(v));
  }
  try {
    return make_tangent_basis(model, x, std::move(vectors));
  } catch (const InvalidArgument&) {
    throw InternalError("degenerate tangent basis at a point of " + model.describe());
  }
}

Tensor gbar(const ModelSpace& model) {
  Tensor gi = model.metric_inverse();
  if (!model.flat()) return gi;
  const std::size_t n = model.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gi[a * n + b] -= model.u[a] * model.u[b];
  return gi;
}

}  // namespace killing
