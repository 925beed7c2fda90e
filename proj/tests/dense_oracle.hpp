// SPDX-License-Identifier: Apache-2.0
// Dense reference evaluation of contraction residuals by direct summation
// over every index, used to cross-check the polynomial residual engine.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "killing/residual.hpp"
#include "killing/tensor.hpp"

namespace killing::testing {

inline Tensor dense_contraction(const ContractionExpr& expr, const std::vector<const Tensor*>& bases,
                                const Tensor& gbar) {
  const std::size_t n = gbar.dim();
  const std::size_t nf = expr.free.size();
  const std::size_t nl = expr.pairs.size();
  Tensor out(n, nf);
  for_each_index(n, nf, [&](const Index& fi) {
    Scalar total = 0;
    for (const auto& term : expr.terms) {
      for_each_index(n, 2 * nl, [&](const Index& li) {
        std::map<std::string, std::size_t> value;
        for (std::size_t k = 0; k < nf; ++k) value[expr.free[k]] = fi[k];
        Scalar w = term.coeff;
        for (std::size_t p = 0; p < nl; ++p) {
          value[expr.pairs[p].first] = li[2 * p];
          value[expr.pairs[p].second] = li[2 * p + 1];
          w *= gbar.at({li[2 * p], li[2 * p + 1]});
        }
        if (w == 0) return;
        for (const auto& f : term.factors) {
          w *= bases[f.base]->at({value[f.slots[0]], value[f.slots[1]], value[f.slots[2]], value[f.slots[3]]});
          if (w == 0) return;
        }
        total += w;
      });
    }
    out.at(fi) = total;
  });
  return out;
}

/// Applies the slot operator to a dense tensor whose slots follow names.
inline Tensor dense_apply(const Tensor& t, const std::vector<std::string>& names, const SlotOperator& op) {
  auto slots_of = [&](const std::vector<std::string>& group) {
    std::vector<std::size_t> s;
    for (const auto& g : group) s.push_back(static_cast<std::size_t>(std::find(names.begin(), names.end(), g) - names.begin()));
    return s;
  };
  Tensor r = t;
  if (op.order == OperatorOrder::SymFirst) {
    if (!op.sym.empty()) r = symmetrise_slots(r, slots_of(op.sym));
    if (!op.anti.empty()) r = antisymmetrise_slots(r, slots_of(op.anti));
  } else {
    if (!op.anti.empty()) r = antisymmetrise_slots(r, slots_of(op.anti));
    if (!op.sym.empty()) r = symmetrise_slots(r, slots_of(op.sym));
  }
  return r;
}

/// Components of a dense residual at the engine's canonical tuples.
inline std::map<Index, Scalar> dense_residual_map(const Tensor& dense, const Residual& res) {
  std::map<Index, Scalar> m;
  for (const auto& [idx, val] : res.nonzero) m[idx] = dense.at(idx);
  return m;
}

}  // namespace killing::testing
