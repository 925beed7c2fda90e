// SPDX-License-Identifier: Apache-2.0
#include "killing/curvature.hpp"

#include "killing/errors.hpp"
#include "killing/group_algebra.hpp"
#include "killing/random.hpp"
#include "killing/young.hpp"

namespace killing {

namespace {

using Check = bool (*)(const Tensor&, std::size_t, std::size_t, std::size_t, std::size_t);

std::optional<std::string> first_failure(const Tensor& t, std::initializer_list<std::pair<const char*, Check>> checks) {
  const std::size_t n = t.dim();
  for (const auto& [tag, check] : checks) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            if (!check(t, i, j, k, l)) return std::string(tag);
  }
  return std::nullopt;
}

const Scalar& c4(const Tensor& t, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = t.dim();
  return t[((i * n + j) * n + k) * n + l];
}

void require_order(const Tensor& t, std::size_t order, const char* what) {
  if (t.order() != order) {
    throw InvalidArgument(std::string(what) + " needs a tensor of order " + std::to_string(order) + ", got " +
                          std::to_string(t.order()));
  }
}

}  // namespace

std::optional<std::string> curvature_violation(const Tensor& t) {
  if (t.order() != 4) return std::string("order");
  return first_failure(
      t, {{"R:anti",
           [](const Tensor& r, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return c4(r, j, i, k, l) == -c4(r, i, j, k, l) && c4(r, i, j, l, k) == -c4(r, i, j, k, l);
           }},
          {"R:pair",
           [](const Tensor& r, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return c4(r, k, l, i, j) == c4(r, i, j, k, l);
           }},
          {"R:Bianchi", [](const Tensor& r, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return is_zero(c4(r, i, j, k, l) + c4(r, i, k, l, j) + c4(r, i, l, j, k));
           }}});
}

std::optional<std::string> sym_curvature_violation(const Tensor& t) {
  if (t.order() != 4) return std::string("order");
  return first_failure(
      t, {{"S:sym",
           [](const Tensor& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return c4(s, j, i, k, l) == c4(s, i, j, k, l) && c4(s, i, j, l, k) == c4(s, i, j, k, l);
           }},
          {"S:pair",
           [](const Tensor& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return c4(s, k, l, i, j) == c4(s, i, j, k, l);
           }},
          {"S:Bianchi", [](const Tensor& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
             return is_zero(c4(s, i, j, k, l) + c4(s, i, l, j, k) + c4(s, i, k, l, j));
           }}});
}

CurvatureTensor::CurvatureTensor(Tensor t) : t_(std::move(t)) {
  if (auto bad = curvature_violation(t_)) {
    throw InvariantViolation(*bad, "tensor is not an algebraic curvature tensor: relation " + *bad + " fails");
  }
}

CurvatureTensor CurvatureTensor::unchecked(Tensor t) { return CurvatureTensor(std::move(t), Unchecked{}); }

SymCurvatureTensor::SymCurvatureTensor(Tensor t) : t_(std::move(t)) {
  if (auto bad = sym_curvature_violation(t_)) {
    throw InvariantViolation(*bad, "tensor is not a symmetrised curvature tensor: relation " + *bad + " fails");
  }
}

SymCurvatureTensor SymCurvatureTensor::unchecked(Tensor t) { return SymCurvatureTensor(std::move(t), Unchecked{}); }

SymmetricForm::SymmetricForm(Tensor t) : t_(std::move(t)) {
  require_order(t_, 2, "symmetric form");
  const std::size_t n = t_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (t_[i * n + j] != t_[j * n + i]) throw InvalidArgument("form is not symmetric");
}

AntisymmetricForm::AntisymmetricForm(Tensor t) : t_(std::move(t)) {
  require_order(t_, 2, "antisymmetric form");
  const std::size_t n = t_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (t_[i * n + j] != -t_[j * n + i]) throw InvalidArgument("form is not antisymmetric");
}

CurvatureTensor kulkarni_nomizu(const SymmetricForm& h, const SymmetricForm& k) {
  if (h.dim() != k.dim()) throw InvalidArgument("Kulkarni-Nomizu factors differ in dimension");
  const std::size_t n = h.dim();
  const Tensor& a = h.tensor();
  const Tensor& b = k.tensor();
  Tensor r(n, 4);
  std::size_t f = 0;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2)
          r[f++] = a[a1 * n + a2] * b[b1 * n + b2] - a[a1 * n + b2] * b[b1 * n + a2] -
                   a[b1 * n + a2] * b[a1 * n + b2] + a[b1 * n + b2] * b[a1 * n + a2];
  return CurvatureTensor::unchecked(std::move(r));
}

SymCurvatureTensor r_to_s(const CurvatureTensor& r) {
  const std::size_t n = r.dim();
  const Tensor& t = r.tensor();
  Tensor s(n, 4);
  std::size_t f = 0;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = 0; b2 < n; ++b2) s[f++] = c4(t, a1, b1, a2, b2) + c4(t, a1, b2, a2, b1);
  return SymCurvatureTensor::unchecked(std::move(s));
}

CurvatureTensor s_to_r(const SymCurvatureTensor& s) {
  const std::size_t n = s.dim();
  const Tensor& t = s.tensor();
  Tensor r(n, 4);
  const Scalar third(1, 3);
  std::size_t f = 0;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) r[f++] = (c4(t, a1, a2, b1, b2) - c4(t, a1, b2, b1, a2)) * third;
  return CurvatureTensor::unchecked(std::move(r));
}

const std::vector<std::size_t> kCurvatureSlotOfLabel = {0, 2, 1, 3};

CurvatureTensor project_to_curvature(const Tensor& t) {
  require_order(t, 4, "curvature projection");
  static const GroupAlgebraElement projector =
      adjoint(young_symmetriser(YoungTableau({{1, 2}, {3, 4}}))) * Scalar(1, 12);
  return CurvatureTensor::unchecked(apply(projector, t, kCurvatureSlotOfLabel));
}

CurvatureTensor metric_rep(const ModelSpace& model) {
  const Tensor g = model.metric();
  const SymmetricForm gf(g);
  if (!model.flat()) {
    return CurvatureTensor::unchecked(kulkarni_nomizu(gf, gf).tensor() * Scalar(1, 2));
  }
  const Matrix gm = Matrix::from_tensor(g);
  const Vector ulow = gm * model.u;
  return kulkarni_nomizu(SymmetricForm(outer(Tensor::vector(ulow), Tensor::vector(ulow))), gf);
}

SymmetricForm act_on_metric(const Matrix& a, const Tensor& g) {
  const Matrix gm = Matrix::from_tensor(g);
  return SymmetricForm((a.transpose() * gm * a).to_tensor());
}

Vector act_on_normal(const Matrix& a, const Tensor& g, const Vector& u) {
  return a.transpose() * (Matrix::from_tensor(g) * u);
}

CurvatureTensor benenti_rep(const Matrix& a, const ModelSpace& model) {
  if (a.rows() != model.dim() || a.cols() != model.dim()) throw InvalidArgument("A has the wrong shape");
  if (is_zero(determinant(a))) throw InvalidArgument("A is singular");
  const Tensor g = model.metric();
  const SymmetricForm ag = act_on_metric(a, g);
  if (!model.flat()) {
    return CurvatureTensor::unchecked(kulkarni_nomizu(ag, ag).tensor() * Scalar(1, 2));
  }
  const Vector au = act_on_normal(a, g, model.u);
  return kulkarni_nomizu(SymmetricForm(outer(Tensor::vector(au), Tensor::vector(au))), ag);
}

CurvatureTensor family_rep(const SymmetricForm& h, const Scalar& l0, const Scalar& l1, const Scalar& l2,
                           const Tensor& g) {
  const SymmetricForm gf(g);
  Tensor r = kulkarni_nomizu(h, h).tensor() * l2;
  r += kulkarni_nomizu(h, gf).tensor() * l1;
  r += kulkarni_nomizu(gf, gf).tensor() * l0;
  return CurvatureTensor::unchecked(std::move(r));
}

Scalar scalar_curvature(const CurvatureTensor& r, const Tensor& g) {
  const std::size_t n = r.dim();
  const Matrix gi = inverse(Matrix::from_tensor(g));
  const Tensor& t = r.tensor();
  Scalar acc(0);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      if (is_zero(gi(a1, a2))) continue;
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (is_zero(gi(b1, b2))) continue;
          acc += gi(a1, a2) * gi(b1, b2) * c4(t, a1, b1, a2, b2);
        }
    }
  return acc;
}

CurvatureTensor random_curvature(std::size_t n, std::uint64_t seed, std::int64_t coeff_bound) {
  if (n < 2) throw InvalidArgument("random curvature needs N >= 2");
  Rng rng(seed);
  return project_to_curvature(rng.tensor(n, 4, coeff_bound));
}

SymmetricForm random_symmetric_form(std::size_t n, std::uint64_t seed, std::int64_t coeff_bound) {
  Rng rng(seed);
  Tensor h(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h[i * n + j] = rng.rational(coeff_bound);
      h[j * n + i] = h[i * n + j];
    }
  return SymmetricForm(std::move(h));
}

Matrix random_invertible(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(static_cast<long>(rng.uniform(-bound, bound)));
    if (!is_zero(determinant(a))) return a;
  }
  throw SamplingFailure("no invertible matrix found");
}

}  // namespace killing
