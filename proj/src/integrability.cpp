// SPDX-License-Identifier: Apache-2.0
#include "killing/integrability.hpp"

#include <chrono>
#include <mutex>

#include "killing/errors.hpp"
#include "killing/group_algebra.hpp"
#include "killing/linalg.hpp"
#include "killing/random.hpp"
#include "killing/young.hpp"

namespace killing {

namespace {

FactorSpec factor(std::size_t base, std::string s0, std::string s1, std::string s2, std::string s3) {
  return {base, {std::move(s0), std::move(s1), std::move(s2), std::move(s3)}};
}

using Names = std::vector<std::string>;

const Names kFree1 = {"b1", "d1", "a2", "b2", "c2", "d2"};

// gbar_{ij} X^i_{b1 a2 b2} X^j_{d1 c2 d2}, with the R slot order for R and
// the S slot order for S.
ContractionExpr quadratic_r() {
  return {kFree1, {{"p", "q"}}, {{1, {factor(0, "p", "b1", "a2", "b2"), factor(0, "q", "d1", "c2", "d2")}}}};
}

ContractionExpr quadratic_s() {
  return {kFree1, {{"p", "q"}}, {{1, {factor(0, "p", "a2", "b1", "b2"), factor(0, "q", "c2", "d1", "d2")}}}};
}

// Omega^a_{b pq} Omega^b_{c rs}, lowered in a.
ContractionExpr omega_wedge() {
  return {{"a", "c", "w", "x", "y", "z"},
          {{"b", "f"}},
          {{1, {factor(0, "a", "b", "w", "x"), factor(0, "f", "c", "y", "z")}}}};
}

ContractionExpr cubic_r() {
  return {{"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"},
          {{"p", "q"}, {"r", "s"}},
          {{1,
            {factor(0, "p", "b1", "a2", "b2"), factor(0, "q", "a1", "r", "c1"), factor(0, "s", "d1", "c2", "d2")}}}};
}

const Names kFree2 = {"b1", "d1", "e1", "e2", "b2", "c2", "d2", "f2"};

ContractionExpr ks2_yin() {
  return {kFree2,
          {{"p", "q"}, {"r", "s"}},
          {{1,
            {factor(0, "p", "c2", "d1", "d2"), factor(0, "q", "b1", "r", "b2"), factor(0, "s", "f2", "e1", "e2")}}}};
}

ContractionExpr ks2_both() {
  return {kFree2,
          {{"p", "q"}, {"r", "s"}},
          {{1,
            {factor(0, "p", "c2", "d1", "d2"), factor(0, "q", "e1", "r", "e2"), factor(0, "s", "f2", "b1", "b2")}}}};
}

const Names kFree3 = {"b2", "b1", "d1", "e1", "e2", "g1", "g2", "c2", "d2", "f2"};

TermSpec quartic_yin() {
  return {1,
          {factor(0, "p", "r", "b1", "b2"), factor(0, "q", "c2", "d1", "d2"), factor(0, "t", "f2", "e1", "e2"),
           factor(0, "u", "s", "g1", "g2")}};
}

TermSpec quartic_yang() {
  return {1,
          {factor(0, "p", "c2", "b1", "b2"), factor(0, "q", "d1", "r", "d2"), factor(0, "t", "f2", "e1", "e2"),
           factor(0, "u", "s", "g1", "g2")}};
}

const std::vector<std::pair<std::string, std::string>> kPairs3 = {{"p", "q"}, {"r", "s"}, {"t", "u"}};

TermSpec cubic_yin() {
  return {1, {factor(0, "p", "r", "b1", "b2"), factor(0, "q", "c2", "d1", "d2"), factor(0, "s", "f2", "e1", "e2")}};
}

TermSpec cubic_yang() {
  return {1, {factor(0, "p", "c2", "b1", "b2"), factor(0, "q", "d1", "r", "d2"), factor(0, "s", "f2", "e1", "e2")}};
}

bool degenerate(const Tensor& gbar) { return determinant(Matrix::from_tensor(gbar)) == 0; }

void require_gbar(const Tensor& gbar, std::size_t n) {
  if (gbar.order() != 2 || gbar.dim() != n) throw InvalidArgument("gbar must be an order-2 tensor of matching dimension");
}

}  // namespace

std::string to_string(ConditionForm1 form) {
  switch (form) {
    case ConditionForm1::MAIN1: return "MAIN1";
    case ConditionForm1::YOUNG_A: return "YOUNG_A";
    case ConditionForm1::SPLIT_B: return "SPLIT_B";
    case ConditionForm1::ANTI_C: return "ANTI_C";
    case ConditionForm1::HOOK_D: return "HOOK_D";
    case ConditionForm1::OMEGA: return "OMEGA";
  }
  throw InternalError("unknown condition-1 form");
}

std::string to_string(ConditionForm2 form) {
  switch (form) {
    case ConditionForm2::MAIN2: return "MAIN2";
    case ConditionForm2::KS2_HOOK_YIN: return "KS2_HOOK_YIN";
    case ConditionForm2::KS2_44_BOTH: return "KS2_44_BOTH";
  }
  throw InternalError("unknown condition-2 form");
}

ConditionForm1 parse_condition_form1(std::string_view name) {
  for (auto f : all_condition1_forms()) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown condition-1 form '" + std::string(name) + "'");
}

ConditionForm2 parse_condition_form2(std::string_view name) {
  for (auto f : all_condition2_forms()) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown condition-2 form '" + std::string(name) + "'");
}

const std::vector<ConditionForm1>& all_condition1_forms() {
  static const std::vector<ConditionForm1> forms = {ConditionForm1::MAIN1,  ConditionForm1::YOUNG_A,
                                                    ConditionForm1::SPLIT_B, ConditionForm1::ANTI_C,
                                                    ConditionForm1::HOOK_D, ConditionForm1::OMEGA};
  return forms;
}

const std::vector<ConditionForm2>& all_condition2_forms() {
  static const std::vector<ConditionForm2> forms = {ConditionForm2::MAIN2, ConditionForm2::KS2_HOOK_YIN,
                                                    ConditionForm2::KS2_44_BOTH};
  return forms;
}

Residual condition1_residual(const CurvatureTensor& r, ConditionForm1 form, const Tensor& gbar) {
  require_gbar(gbar, r.dim());
  switch (form) {
    case ConditionForm1::MAIN1:
      return evaluate_residual(quadratic_r(), {{}, {"a2", "b2", "c2", "d2"}}, {&r.tensor()}, gbar);
    case ConditionForm1::OMEGA:
      if (degenerate(gbar)) throw UnsupportedForm("OMEGA needs a nondegenerate gbar; the flat model has none");
      return evaluate_residual(omega_wedge(), {{}, {"w", "x", "y", "z"}}, {&r.tensor()}, gbar);
    default:
      return condition1_residual(r_to_s(r), form, gbar);
  }
}

Residual condition1_residual(const SymCurvatureTensor& s, ConditionForm1 form, const Tensor& gbar) {
  require_gbar(gbar, s.dim());
  const std::vector<const Tensor*> bases = {&s.tensor()};
  switch (form) {
    case ConditionForm1::MAIN1:
    case ConditionForm1::OMEGA:
      return condition1_residual(s_to_r(s), form, gbar);
    case ConditionForm1::YOUNG_A:
      return evaluate_residual(quadratic_s(), {{"b2", "b1", "d1"}, {"b2", "c2", "d2", "a2"}, OperatorOrder::SymFirst},
                               bases, gbar);
    case ConditionForm1::SPLIT_B:
      return evaluate_residual(quadratic_s(), {{"b2", "b1", "d1"}, {"c2", "d2", "a2"}}, bases, gbar);
    case ConditionForm1::ANTI_C:
      return evaluate_residual(quadratic_s(), {{}, {"b2", "c2", "d2", "a2"}}, bases, gbar);
    case ConditionForm1::HOOK_D:
      return evaluate_residual(quadratic_s(), {{"b2", "b1", "d1"}, {"b2", "c2", "d2", "a2"}, OperatorOrder::AntiFirst},
                               bases, gbar);
  }
  throw InternalError("unknown condition-1 form");
}

Residual condition2_residual(const CurvatureTensor& r, ConditionForm2 form, const Tensor& gbar) {
  require_gbar(gbar, r.dim());
  if (form == ConditionForm2::MAIN2) {
    return evaluate_residual(cubic_r(), {{"a1", "b1", "c1", "d1"}, {"a2", "b2", "c2", "d2"}}, {&r.tensor()}, gbar);
  }
  return condition2_residual(r_to_s(r), form, gbar);
}

Residual condition2_residual(const SymCurvatureTensor& s, ConditionForm2 form, const Tensor& gbar) {
  require_gbar(gbar, s.dim());
  const std::vector<const Tensor*> bases = {&s.tensor()};
  switch (form) {
    case ConditionForm2::MAIN2:
      return condition2_residual(s_to_r(s), form, gbar);
    case ConditionForm2::KS2_HOOK_YIN:
      return evaluate_residual(
          ks2_yin(), {{"b2", "b1", "d1", "e1", "e2"}, {"b2", "c2", "d2", "f2"}, OperatorOrder::SymFirst}, bases, gbar);
    case ConditionForm2::KS2_44_BOTH:
      return evaluate_residual(ks2_both(), {{"b1", "d1", "e1", "e2"}, {"b2", "c2", "d2", "f2"}}, bases, gbar);
  }
  throw InternalError("unknown condition-2 form");
}

Residual condition3_residual(const SymCurvatureTensor& s, const Tensor& gbar) {
  require_gbar(gbar, s.dim());
  const ContractionExpr expr{kFree3, kPairs3, {quartic_yin(), quartic_yang()}};
  return evaluate_residual(expr, {{"b2", "b1", "d1", "e1", "e2", "g1", "g2"}, {"c2", "d2", "f2"}}, {&s.tensor()}, gbar);
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"hook",       "hooks-yin",   "hooks-yang",      "hook3-yin",
                                                 "hook3-yang", "bianchi-sym", "projector-split"};
  return names;
}

Tensor projector_split_defect(const Tensor& t) {
  if (t.order() != 6) throw InvalidArgument("projector split acts on order-6 tensors");
  // Labels 1..6 stand for b2,b1,d1,c2,d2,a2; slots are b1,b2,d1,a2,c2,d2.
  static const std::vector<std::size_t> slot_of_label = {1, 0, 2, 4, 5, 3};
  static std::once_flag once;
  static GroupAlgebraElement defect(6);
  std::call_once(once, [] {
    const auto left = label_antisymmetriser({4, 5, 6}, 6) * label_symmetriser({1, 2, 3}, 6) * Scalar(1, 36);
    const auto t1 = young_symmetriser(YoungTableau({{1, 2, 3}, {4}, {5}, {6}}));
    const auto t2 = young_symmetriser(YoungTableau({{4, 1, 2, 3}, {5}, {6}}));
    const auto right = (t1 * adjoint(t1) + adjoint(t2) * t2) * Scalar(1, 10368);
    defect = left - right;
  });
  return apply(defect, t, slot_of_label);
}

IdentityReport verify_identity_suite(const SymCurvatureTensor& s, const Tensor& gbar, std::uint64_t projector_seed) {
  if (auto tag = sym_curvature_violation(s.tensor())) {
    throw InvariantViolation(*tag, "identity suite needs a valid symmetrised curvature tensor");
  }
  require_gbar(gbar, s.dim());
  const std::size_t n = s.dim();
  const std::vector<const Tensor*> bases = {&s.tensor()};
  IdentityReport report;
  auto expect_zero = [&](const std::string& name, const Residual& res) {
    if (!res.is_zero()) {
      throw IdentityViolation(name, "identity " + name + " has " + std::to_string(res.support()) + " nonzero components");
    }
    report.passed.push_back(name);
  };

  expect_zero("hook", evaluate_residual(quadratic_s(),
                                        {{"c2", "b2", "b1", "d1"}, {"c2", "d2", "a2"}, OperatorOrder::AntiFirst},
                                        bases, gbar));
  const SlotOperator hooks{{"c2", "b2", "b1", "d1", "e1", "e2"}, {"c2", "d2", "f2"}, OperatorOrder::AntiFirst};
  expect_zero("hooks-yin", evaluate_residual({kFree2, {{"p", "q"}, {"r", "s"}}, {cubic_yin()}}, hooks, bases, gbar));
  expect_zero("hooks-yang", evaluate_residual({kFree2, {{"p", "q"}, {"r", "s"}}, {cubic_yang()}}, hooks, bases, gbar));
  const SlotOperator hook3{
      {"c2", "b2", "b1", "d1", "e1", "e2", "g1", "g2"}, {"c2", "d2", "f2"}, OperatorOrder::AntiFirst};
  expect_zero("hook3-yin", evaluate_residual({kFree3, kPairs3, {quartic_yin()}}, hook3, bases, gbar));
  expect_zero("hook3-yang", evaluate_residual({kFree3, kPairs3, {quartic_yang()}}, hook3, bases, gbar));

  const Tensor& t = s.tensor();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          const Scalar lhs = t.at({i, a, b1, b2}) + t.at({i, a, b2, b1});
          const Scalar rhs = -2 * (t.at({i, b1, b2, a}) + t.at({i, b2, b1, a}));
          if (lhs != rhs) throw IdentityViolation("bianchi-sym", "symmetrised Bianchi identity fails");
        }
  report.passed.push_back("bianchi-sym");

  Rng rng(projector_seed);
  const Vector x = rng.vector(n, 3), u = rng.vector(n, 3), v = rng.vector(n, 3), w = rng.vector(n, 3);
  const Tensor xxx = outer(outer(Tensor::vector(x), Tensor::vector(x)), Tensor::vector(x));
  const Tensor uvw = antisymmetrise_slots(outer(outer(Tensor::vector(u), Tensor::vector(v)), Tensor::vector(w)), {0, 1, 2});
  if (!projector_split_defect(outer(xxx, uvw)).is_zero()) {
    throw IdentityViolation("projector-split", "projector decomposition differs on x x x (u^v^w)");
  }
  report.passed.push_back("projector-split");
  return report;
}

IntegrabilityReport check(const CurvatureTensor& r, const ModelSpace& model) {
  return check(r, model, {ConditionForm1::MAIN1}, {ConditionForm2::MAIN2});
}

IntegrabilityReport check(const CurvatureTensor& r, const ModelSpace& model, const std::vector<ConditionForm1>& forms1,
                          const std::vector<ConditionForm2>& forms2) {
  if (r.dim() != model.dim()) throw InvalidArgument("tensor dimension does not match the model");
  if (forms1.empty() || forms2.empty()) throw InvalidArgument("at least one form per condition is required");
  const auto start = std::chrono::steady_clock::now();
  const Tensor gb = gbar(model);
  IntegrabilityReport report;
  for (auto f : forms1) {
    const Residual res = condition1_residual(r, f, gb);
    report.residual_supports.push_back({to_string(f), 1, res.support(), res.canonical_count});
    report.forms_used.push_back(to_string(f));
    report.cond1_zero = report.cond1_zero && res.is_zero();
  }
  report.cond2_forms_conditional = !report.cond1_zero;
  for (auto f : forms2) {
    const Residual res = condition2_residual(r, f, gb);
    report.residual_supports.push_back({to_string(f), 2, res.support(), res.canonical_count});
    report.forms_used.push_back(to_string(f));
    report.cond2_zero = report.cond2_zero && res.is_zero();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace killing
