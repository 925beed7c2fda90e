// SPDX-License-Identifier: Apache-2.0
#include "killing/killing_fields.hpp"

#include "killing/errors.hpp"

namespace killing {

namespace {

void require_point(const ModelSpace& model, const Vector& x) {
  if (!on_model(model, x)) throw InvalidArgument("point is not on the model");
}

void require_tangent(const ModelSpace& model, const Vector& x, std::initializer_list<const Vector*> vs) {
  for (const Vector* v : vs) {
    if (!is_tangent(model, x, *v)) throw InvalidArgument("argument is not a tangent vector at x");
  }
}

}  // namespace

Scalar evaluate_multilinear(const Tensor& t, const std::vector<const Vector*>& vectors) {
  if (vectors.size() != t.order()) throw InvalidArgument("need one vector per slot");
  for (const Vector* v : vectors) {
    if (v->size() != t.dim()) throw InvalidArgument("vector length differs from tensor dimension");
  }
  Scalar acc(0);
  const std::size_t d = t.order();
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const Scalar& c = t[flat];
    if (is_zero(c)) continue;
    Scalar term = c;
    std::size_t rest = flat;
    for (std::size_t s = d; s-- > 0;) {
      term *= (*vectors[s])[rest % t.dim()];
      rest /= t.dim();
      if (is_zero(term)) break;
    }
    acc += term;
  }
  return acc;
}

Scalar killing_eval(const SymCurvatureTensor& s, const ModelSpace& model, const Vector& x, const Vector& v,
                    const Vector& w) {
  require_point(model, x);
  require_tangent(model, x, {&v, &w});
  return evaluate_multilinear(s.tensor(), {&x, &x, &v, &w});
}

Scalar killing_eval_r(const CurvatureTensor& r, const ModelSpace& model, const Vector& x, const Vector& v,
                      const Vector& w) {
  require_point(model, x);
  require_tangent(model, x, {&v, &w});
  return evaluate_multilinear(r.tensor(), {&x, &v, &x, &w});
}

Scalar killing_vector_eval(const AntisymmetricForm& a, const ModelSpace& model, const Vector& x, const Vector& v) {
  require_point(model, x);
  require_tangent(model, x, {&v});
  return evaluate_multilinear(a.tensor(), {&x, &v});
}

Scalar killing_cov_deriv(const SymCurvatureTensor& s, const ModelSpace& model, const Vector& x, const Vector& c,
                         const Vector& a, const Vector& b) {
  require_point(model, x);
  require_tangent(model, x, {&c, &a, &b});
  return 2 * evaluate_multilinear(s.tensor(), {&x, &c, &a, &b});
}

}  // namespace killing
