// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "killing/curvature.hpp"
#include "killing/models.hpp"

namespace killing {

/// T(v_1, ..., v_d) for an order-d tensor.
Scalar evaluate_multilinear(const Tensor& t, const std::vector<const Vector*>& vectors);

/// K(v,w) = S_{a1a2b1b2} x^{a1} x^{a2} v^{b1} w^{b2}. Throws InvalidArgument
/// unless x lies on the model and v, w are tangent there.
Scalar killing_eval(const SymCurvatureTensor& s, const ModelSpace& model, const Vector& x, const Vector& v,
                    const Vector& w);
/// K(v,w) = R_{a1b1a2b2} x^{a1} v^{b1} x^{a2} w^{b2}. Equals half of
/// killing_eval(r_to_s(R), ...).
Scalar killing_eval_r(const CurvatureTensor& r, const ModelSpace& model, const Vector& x, const Vector& v,
                      const Vector& w);
/// K(v) = A_{ab} x^a v^b.
Scalar killing_vector_eval(const AntisymmetricForm& a, const ModelSpace& model, const Vector& x, const Vector& v);
/// (nabla_c K)(a,b) = 2 S_{c1c2d1d2} x^{c1} c^{c2} a^{d1} b^{d2}.
Scalar killing_cov_deriv(const SymCurvatureTensor& s, const ModelSpace& model, const Vector& x, const Vector& c,
                         const Vector& a, const Vector& b);

}  // namespace killing
