// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "killing/tensor.hpp"

namespace killing {

/// One order-4 factor of a contraction: slot k carries either a free index
/// name or a contraction label.
struct FactorSpec {
  std::size_t base;  // position in the list of base tensors
  std::array<std::string, 4> slots;
};

struct TermSpec {
  long coeff = 1;
  std::vector<FactorSpec> factors;
};

/// Sum of products of order-4 tensors. Each pair (i, j) of labels is
/// contracted through gbar^{ij}; all tensors carry lower indices.
struct ContractionExpr {
  std::vector<std::string> free;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<TermSpec> terms;
};

enum class OperatorOrder {
  SymFirst,   // Anti(Sym(T)), the adjoint of a hook Young symmetriser
  AntiFirst,  // Sym(Anti(T)), a hook Young symmetriser
};

/// Symmetriser over `sym` and antisymmetriser over `anti` (unnormalized).
/// The two groups share at most one name.
struct SlotOperator {
  std::vector<std::string> sym;
  std::vector<std::string> anti;
  OperatorOrder order = OperatorOrder::SymFirst;
};

/// Components of a residual at canonical index tuples: values on the
/// antisymmetric output group strictly increasing, on the symmetric output
/// group non-decreasing, arbitrary on the remaining slots.
struct Residual {
  std::vector<std::string> slots;
  std::vector<std::pair<Index, Scalar>> nonzero;
  std::size_t canonical_count = 0;

  std::size_t support() const { return nonzero.size(); }
  bool is_zero() const { return nonzero.empty(); }
};

/// Evaluates op applied to expr. bases[k] is the tensor named by
/// FactorSpec::base == k; gbar is the contraction form.
Residual evaluate_residual(const ContractionExpr& expr, const SlotOperator& op, const std::vector<const Tensor*>& bases,
                           const Tensor& gbar);

/// Canonical tuples of length k over {0..n-1}: strictly increasing when
/// strict, non-decreasing otherwise.
std::vector<Index> canonical_tuples(std::size_t n, std::size_t k, bool strict);

}  // namespace killing
