// SPDX-License-Identifier: Apache-2.0
#include <optional>

#include "doctest.h"
#include "killing/curvature.hpp"
#include "killing/errors.hpp"
#include "killing/killing_fields.hpp"
#include "killing/linalg.hpp"
#include "killing/models.hpp"
#include "killing/random.hpp"

using namespace killing;

namespace {

std::vector<ModelSpace> test_models(int n) {
  return {make_sphere({n, 0}), make_sphere({n - 1, 1}), make_flat({n, 0}), make_flat({n - 1, 1})};
}

// Random tangent vector: a rational combination of the tangent basis.
Vector random_tangent(const TangentBasis& basis, Rng& rng) {
  Vector v(basis.vectors.front().size(), Scalar(0));
  for (const auto& e : basis.vectors) {
    const Scalar c = rng.rational(3);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * e[i];
  }
  return v;
}

Vector apply_matrix(const Matrix& a, const Vector& v) { return a * v; }

// K_x(v,w) for Benenti tensors in closed form, on spheres and flat models.
Scalar benenti_closed_form(const Matrix& a, const ModelSpace& model, const Vector& x, const Vector& v,
                           const Vector& w) {
  const Tensor& g = model.metric();
  const Vector ax = apply_matrix(a, x), av = apply_matrix(a, v), aw = apply_matrix(a, w);
  if (!model.flat()) return bilinear(g, ax, ax) * bilinear(g, av, aw) - bilinear(g, ax, av) * bilinear(g, ax, aw);
  const Vector& u = model.u;
  return bilinear(g, ax, u) * bilinear(g, ax, u) * bilinear(g, av, aw) -
         bilinear(g, ax, u) * bilinear(g, ax, av) * bilinear(g, aw, u) -
         bilinear(g, ax, u) * bilinear(g, ax, aw) * bilinear(g, av, u) +
         bilinear(g, ax, ax) * bilinear(g, av, u) * bilinear(g, aw, u);
}

}  // namespace

TEST_CASE("metric representative evaluates to the metric") {
  for (const auto& model : test_models(4)) {
    const CurvatureTensor r = metric_rep(model);
    const SymCurvatureTensor s = r_to_s(r);
    Rng rng(3);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Vector x = sample_point(model, seed).x;
      const TangentBasis basis = tangent_basis(model, x);
      const Vector v = random_tangent(basis, rng), w = random_tangent(basis, rng);
      const Scalar gvw = bilinear(model.metric(), v, w);
      CHECK(killing_eval_r(r, model, x, v, w) == gvw);
      CHECK(killing_eval(s, model, x, v, w) == 2 * gvw);
      CHECK(killing_cov_deriv(s, model, x, v, w, random_tangent(basis, rng)) == 0);
    }
  }
}

TEST_CASE("evaluation is symmetric, linear and vanishes on zero") {
  const auto model = make_sphere({3, 1});
  const SymCurvatureTensor s = r_to_s(random_curvature(4, 12));
  Rng rng(5);
  const Vector x = sample_point(model, 2).x;
  const TangentBasis basis = tangent_basis(model, x);
  const Vector v = random_tangent(basis, rng), w = random_tangent(basis, rng), z = random_tangent(basis, rng);
  CHECK(killing_eval(s, model, x, v, w) == killing_eval(s, model, x, w, v));
  CHECK(killing_eval(s, model, x, Vector(4, Scalar(0)), w) == 0);
  Vector vz(4);
  for (std::size_t i = 0; i < 4; ++i) vz[i] = 2 * v[i] + z[i];
  CHECK(killing_cov_deriv(s, model, x, vz, w, z) ==
        2 * killing_cov_deriv(s, model, x, v, w, z) + killing_cov_deriv(s, model, x, z, w, z));
  CHECK(killing_eval_r(s_to_r(s), model, x, v, w) * 2 == killing_eval(s, model, x, v, w));
}

TEST_CASE("arguments are validated") {
  const auto model = make_sphere({3, 0});
  const SymCurvatureTensor s = r_to_s(metric_rep(model));
  const Vector x = {1, 0, 0};
  CHECK_THROWS_AS(killing_eval(s, model, x, {1, 0, 0}, {0, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(killing_eval(s, model, {1, 1, 0}, {0, 0, 1}, {0, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(killing_cov_deriv(s, model, x, {0, 1, 0}, {0, 1, 0}, {1, 0, 0}), InvalidArgument);
  const AntisymmetricForm a(Matrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}).to_tensor());
  CHECK(killing_vector_eval(a, model, x, {0, 1, 0}) == 1);
  CHECK_THROWS_AS(killing_vector_eval(a, model, x, {1, 0, 0}), InvalidArgument);
}

TEST_CASE("the symmetrised Killing equation vanishes for every valid S") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& model : test_models(n)) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SymCurvatureTensor s = r_to_s(random_curvature(static_cast<std::size_t>(n), seed));
        Rng rng(seed + 1000);
        for (std::uint64_t p = 0; p < 5; ++p) {
          const Vector x = sample_point(model, seed * 31 + p).x;
          const TangentBasis basis = tangent_basis(model, x);
          const Vector a = random_tangent(basis, rng), b = random_tangent(basis, rng), c = random_tangent(basis, rng);
          const Scalar sym = killing_cov_deriv(s, model, x, a, b, c) + killing_cov_deriv(s, model, x, b, c, a) +
                             killing_cov_deriv(s, model, x, c, a, b) + killing_cov_deriv(s, model, x, a, c, b) +
                             killing_cov_deriv(s, model, x, c, b, a) + killing_cov_deriv(s, model, x, b, a, c);
          CHECK(sym == 0);
        }
      }
    }
  }
}

TEST_CASE("Benenti representatives match the closed form up to one constant") {
  const std::vector<ModelSpace> models = {make_sphere({3, 0}), make_sphere({2, 1}), make_flat({3, 0}),
                                          make_flat({2, 1})};
  for (const auto& model : models) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Matrix a = random_invertible(3, seed);
      const CurvatureTensor r = benenti_rep(a, model);
      const SymCurvatureTensor s = r_to_s(r);
      std::optional<Scalar> ratio;
      Rng rng(seed + 77);
      for (std::uint64_t p = 0; p < 5; ++p) {
        const Vector x = sample_point(model, seed * 13 + p).x;
        const TangentBasis basis = tangent_basis(model, x);
        for (int pair = 0; pair < 5; ++pair) {
          const Vector v = random_tangent(basis, rng), w = random_tangent(basis, rng);
          const Scalar expected = benenti_closed_form(a, model, x, v, w);
          CHECK(killing_eval_r(r, model, x, v, w) == expected);
          const Scalar value = killing_eval(s, model, x, v, w);
          if (expected == 0) {
            CHECK(value == 0);
            continue;
          }
          if (!ratio) ratio = value / expected;
          CHECK(value == *ratio * expected);
        }
      }
      REQUIRE(ratio.has_value());
      CHECK(*ratio == 2);
    }
  }
}

TEST_CASE("nonzero curvature tensors give nonzero Killing tensors") {
  for (const auto& model : test_models(4)) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SymCurvatureTensor s = r_to_s(random_curvature(4, seed));
      Rng rng(seed);
      bool nonzero = false;
      for (std::uint64_t p = 0; p < 10 && !nonzero; ++p) {
        const Vector x = sample_point(model, p).x;
        const TangentBasis basis = tangent_basis(model, x);
        nonzero = killing_eval(s, model, x, random_tangent(basis, rng), random_tangent(basis, rng)) != 0;
      }
      CHECK(nonzero);
    }
  }
}
