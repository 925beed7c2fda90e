// SPDX-License-Identifier: Apache-2.0
#include "killing/oracle.hpp"

#include <chrono>

#include "killing/errors.hpp"
#include "killing/killing_fields.hpp"

namespace killing {

namespace {

// Alt_{abc} of an order-3 frame tensor, unnormalized.
Tensor alternate(const Tensor& t) { return antisymmetrise_slots(t, {0, 1, 2}); }

// C_{abc} = M_a^d N_{dbc} with M_a^d = sum_e m_{ae} ginv^{ed}.
Tensor lead_multiply(const Matrix& m, const Matrix& ginv, const Tensor& t) {
  const std::size_t n = t.dim();
  const Matrix mg = m * ginv;
  Tensor out(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d) {
      if (is_zero(mg(a, d))) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) out.at({a, b, c}) += mg(a, d) * t.at({d, b, c});
    }
  return out;
}

}  // namespace

PointFrameData compute_point_data(const SymCurvatureTensor& s, const ModelSpace& model, const ModelPoint& x,
                                  const TangentBasis& basis) {
  if (s.dim() != model.dim()) throw InvalidArgument("tensor dimension does not match the model");
  if (!on_model(model, x.x)) throw InvalidArgument("point is not on the model");
  for (const auto& v : basis.vectors) {
    if (!is_tangent(model, x.x, v)) throw InvalidArgument("basis vector is not tangent at the point");
  }
  if (basis.size() + 1 != model.dim()) throw InvalidArgument("tangent basis has the wrong size");

  const std::size_t n = basis.size();
  const std::size_t dim = model.dim();
  const Tensor& t = s.tensor();
  const Tensor gb = gbar(model);

  PointFrameData data{x, basis, Matrix(n, n), basis.gram, basis.gram_inverse, Tensor(n, 3)};
  const Vector& xv = x.x;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      data.k(a, b) = evaluate_multilinear(t, {&xv, &xv, &basis.vectors[a], &basis.vectors[b]});

  // sxx_{p a2} = S_{p a2 x x}, sxe_{p}(c2, d2) = S_{p c2 x d2}, lowered in p.
  const Tensor sx = contract_vector(t, 3, xv);                    // S_{p a b x}
  const Tensor sxx = contract_vector(sx, 2, xv);                  // S_{p a x x}
  const Tensor s_x_ = contract_vector(t, 2, xv);                  // S_{p c x d}
  const Tensor sx__ = contract_vector(t, 1, xv);                  // S_{p x a d}
  // Frame components: A_p(a) = sxx_{p e_a}; B_p(b, c) = S_{p e_b x e_c}; C_p(a, c) = S_{p x e_a e_c}.
  std::vector<Vector> fa(n, Vector(dim)), fb_raised(n * n, Vector(dim)), fc_raised(n * n, Vector(dim));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t i = 0; i < dim; ++i) fa[a][p] += sxx.at({p, i}) * basis.vectors[a][i];
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      Vector lb(dim), lc(dim);
      for (std::size_t q = 0; q < dim; ++q)
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) {
            lb[q] += s_x_.at({q, i, j}) * basis.vectors[b][i] * basis.vectors[c][j];
            lc[q] += sx__.at({q, i, j}) * basis.vectors[b][i] * basis.vectors[c][j];
          }
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q) {
          if (is_zero(gb.at({p, q}))) continue;
          fb_raised[b * n + c][p] += gb.at({p, q}) * lb[q];
          fc_raised[b * n + c][p] += gb.at({p, q}) * lc[q];
        }
    }
  // Nbar_{abc} = A(a).B(b,c) + A(b).C(a,c), contracted through gbar.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar v = 0;
        for (std::size_t p = 0; p < dim; ++p) v += fa[a][p] * fb_raised[b * n + c][p] + fa[b][p] * fc_raised[a * n + c][p];
        data.nbar.at({a, b, c}) = v;
      }
  return data;
}

TnsResiduals tns_residuals(const PointFrameData& data) {
  const std::size_t n = data.nbar.dim();
  Tensor nt(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) nt.at({a, b, c}) = data.nbar.at({a, b, c}) - data.nbar.at({a, c, b});
  const Tensor kn = lead_multiply(data.k, data.gram_inverse, nt);
  const Tensor kkn = lead_multiply(data.k, data.gram_inverse, kn);
  return {{alternate(nt), alternate(kn), alternate(kkn)}};
}

std::uint64_t oracle_point_seed(std::uint64_t seed, std::size_t k) {
  return seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(k) + 1;
}

OracleReport integrable_oracle(const SymCurvatureTensor& s, const ModelSpace& model, std::size_t num_points,
                               std::uint64_t seed) {
  if (num_points == 0) throw InvalidArgument("the oracle needs at least one sample point");
  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  for (std::size_t k = 0; k < num_points; ++k) {
    PointResult pr;
    pr.index = k;
    pr.seed = oracle_point_seed(seed, k);
    pr.x = sample_point(model, pr.seed);
    const PointFrameData data = compute_point_data(s, model, pr.x, tangent_basis(model, pr.x.x));
    const TnsResiduals res = tns_residuals(data);
    for (std::size_t c = 0; c < 3; ++c) {
      pr.support[c] = res.residual[c].support();
      if (pr.support[c] != 0 && report.passes[c]) {
        report.passes[c] = false;
        report.witness[c] = k;
      }
    }
    report.points.push_back(std::move(pr));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace killing
