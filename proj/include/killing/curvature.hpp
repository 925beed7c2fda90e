// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "killing/linalg.hpp"
#include "killing/models.hpp"
#include "killing/tensor.hpp"

namespace killing {

/// Returns the tag of the first violated relation ("R:anti", "R:pair",
/// "R:Bianchi"), or nothing when t is an algebraic curvature tensor.
/// Slot order a1, b1, a2, b2.
std::optional<std::string> curvature_violation(const Tensor& t);
/// Same for the symmetrised class ("S:sym", "S:pair", "S:Bianchi").
/// Slot order a1, a2, b1, b2.
std::optional<std::string> sym_curvature_violation(const Tensor& t);

/// Order-4 tensor with the symmetries of a Riemann tensor.
class CurvatureTensor {
 public:
  /// Throws InvariantViolation naming the broken relation.
  explicit CurvatureTensor(Tensor t);
  static CurvatureTensor unchecked(Tensor t);
  const Tensor& tensor() const { return t_; }
  std::size_t dim() const { return t_.dim(); }
  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;

 private:
  struct Unchecked {};
  CurvatureTensor(Tensor t, Unchecked) : t_(std::move(t)) {}
  Tensor t_;
};

/// Order-4 tensor symmetric in each pair, pair symmetric, with the
/// symmetrised Bianchi identity.
class SymCurvatureTensor {
 public:
  explicit SymCurvatureTensor(Tensor t);
  static SymCurvatureTensor unchecked(Tensor t);
  const Tensor& tensor() const { return t_; }
  std::size_t dim() const { return t_.dim(); }
  friend bool operator==(const SymCurvatureTensor&, const SymCurvatureTensor&) = default;

 private:
  struct Unchecked {};
  SymCurvatureTensor(Tensor t, Unchecked) : t_(std::move(t)) {}
  Tensor t_;
};

class SymmetricForm {
 public:
  explicit SymmetricForm(Tensor t);
  const Tensor& tensor() const { return t_; }
  std::size_t dim() const { return t_.dim(); }

 private:
  Tensor t_;
};

class AntisymmetricForm {
 public:
  explicit AntisymmetricForm(Tensor t);
  const Tensor& tensor() const { return t_; }
  std::size_t dim() const { return t_.dim(); }

 private:
  Tensor t_;
};

/// (h o k)_{a1 b1 a2 b2} = h_{a1a2} k_{b1b2} - h_{a1b2} k_{b1a2} - h_{b1a2} k_{a1b2} + h_{b1b2} k_{a1a2}.
CurvatureTensor kulkarni_nomizu(const SymmetricForm& h, const SymmetricForm& k);

/// S_{a1a2b1b2} = R_{a1b1a2b2} + R_{a1b2a2b1}.
SymCurvatureTensor r_to_s(const CurvatureTensor& r);
/// R_{a1b1a2b2} = (S_{a1a2b1b2} - S_{a1b2b1a2}) / 3.
CurvatureTensor s_to_r(const SymCurvatureTensor& s);

/// Labels 1..4 of the curvature tableau [[1,2],[3,4]] name a1, a2, b1, b2;
/// this is where those names sit in the R slot order a1, b1, a2, b2.
extern const std::vector<std::size_t> kCurvatureSlotOfLabel;

/// (1/12) times the adjoint Young symmetriser of [[a1,a2],[b1,b2]].
CurvatureTensor project_to_curvature(const Tensor& t);

/// Non-flat: (1/2) g o g. Flat: (u (x) u) o g.
CurvatureTensor metric_rep(const ModelSpace& model);
/// Pull-back of g along A: (A g)_{ab} = A^c_a A^d_b g_{cd}.
SymmetricForm act_on_metric(const Matrix& a, const Tensor& g);
/// Covector g(A e_a, u).
Vector act_on_normal(const Matrix& a, const Tensor& g, const Vector& u);
/// Non-flat: (1/2)(Ag) o (Ag). Flat: (Au (x) Au) o (Ag). Throws
/// InvalidArgument for singular A.
CurvatureTensor benenti_rep(const Matrix& a, const ModelSpace& model);
/// l2 h o h + l1 h o g + l0 g o g.
CurvatureTensor family_rep(const SymmetricForm& h, const Scalar& l0, const Scalar& l1, const Scalar& l2,
                           const Tensor& g);

/// g^{a1a2} g^{b1b2} R_{a1b1a2b2}; g is the metric with lower indices.
Scalar scalar_curvature(const CurvatureTensor& r, const Tensor& g);

/// Projection of a tensor with independent random components.
CurvatureTensor random_curvature(std::size_t n, std::uint64_t seed, std::int64_t coeff_bound = 5);
SymmetricForm random_symmetric_form(std::size_t n, std::uint64_t seed, std::int64_t coeff_bound = 5);
/// Random matrix with nonzero determinant, integer entries in [-bound, bound].
Matrix random_invertible(std::size_t n, std::uint64_t seed, std::int64_t bound = 3);

}  // namespace killing
