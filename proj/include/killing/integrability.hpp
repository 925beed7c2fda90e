// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "killing/curvature.hpp"
#include "killing/models.hpp"
#include "killing/residual.hpp"

namespace killing {

/// Equivalent forms of the first algebraic integrability condition.
///   MAIN1    antisymmetriser over a2,b2,c2,d2 applied to gbar R R
///   YOUNG_A  adjoint hook symmetriser, rows b2 b1 d1 and column b2 c2 d2 a2, on gbar S S
///   SPLIT_B  antisymmetriser over c2,d2,a2 times symmetriser over b2,b1,d1
///   ANTI_C   antisymmetriser over b2,c2,d2,a2
///   HOOK_D   hook symmetriser with the same rows and column as YOUNG_A
///   OMEGA    curvature form wedge product, curved models only
enum class ConditionForm1 { MAIN1, YOUNG_A, SPLIT_B, ANTI_C, HOOK_D, OMEGA };

/// Equivalent forms of the second algebraic integrability condition, given
/// the first.
///   MAIN2        antisymmetriser over a2,b2,c2,d2 and symmetriser over a1,b1,c1,d1 on gbar gbar R R R
///   KS2_HOOK_YIN adjoint hook symmetriser, row b2 b1 d1 e1 e2, column b2 c2 d2 f2, on gbar gbar S S S
///   KS2_44_BOTH  antisymmetriser over b2,c2,d2,f2 and symmetriser over b1,d1,e1,e2
enum class ConditionForm2 { MAIN2, KS2_HOOK_YIN, KS2_44_BOTH };

std::string to_string(ConditionForm1 form);
std::string to_string(ConditionForm2 form);
/// Throws InvalidArgument for unknown names.
ConditionForm1 parse_condition_form1(std::string_view name);
ConditionForm2 parse_condition_form2(std::string_view name);
const std::vector<ConditionForm1>& all_condition1_forms();
const std::vector<ConditionForm2>& all_condition2_forms();

/// gbar is the contraction form g^{ab} (curved) or g^{ab} - u^a u^b (flat).
/// Throws UnsupportedForm for OMEGA with a degenerate gbar.
Residual condition1_residual(const CurvatureTensor& r, ConditionForm1 form, const Tensor& gbar);
Residual condition1_residual(const SymCurvatureTensor& s, ConditionForm1 form, const Tensor& gbar);
Residual condition2_residual(const CurvatureTensor& r, ConditionForm2 form, const Tensor& gbar);
Residual condition2_residual(const SymCurvatureTensor& s, ConditionForm2 form, const Tensor& gbar);
/// Free slots b2,b1,d1,e1,e2,g1,g2,c2,d2,f2.
Residual condition3_residual(const SymCurvatureTensor& s, const Tensor& gbar);

/// Names of the identities checked by verify_identity_suite, in order.
const std::vector<std::string>& identity_names();

struct IdentityReport {
  std::vector<std::string> passed;
};

/// Checks the identities that hold for every symmetrised curvature tensor.
/// projector_seed drives the random vectors of the projector check. Throws
/// InvariantViolation when s itself is invalid and IdentityViolation naming
/// the failed identity otherwise.
IdentityReport verify_identity_suite(const SymCurvatureTensor& s, const Tensor& gbar, std::uint64_t projector_seed = 1);

/// The projector split of the order-6 tensor t with slot order b1,b2,d1,a2,c2,d2:
/// returns (left side applied to t) - (right side applied to t).
Tensor projector_split_defect(const Tensor& t);

struct FormResult {
  std::string form;
  int condition = 0;  // 1 or 2
  std::size_t support = 0;
  std::size_t canonical_count = 0;
};

struct IntegrabilityReport {
  bool cond1_zero = true;
  bool cond2_zero = true;
  std::vector<FormResult> residual_supports;
  std::vector<std::string> forms_used;
  /// The condition-2 forms are only known to agree when condition 1 holds.
  bool cond2_forms_conditional = false;
  double seconds = 0.0;

  bool integrable() const { return cond1_zero && cond2_zero; }
};

/// MAIN1 and MAIN2 with the model's gbar.
IntegrabilityReport check(const CurvatureTensor& r, const ModelSpace& model);
/// Evaluates every listed form. A condition counts as zero when all of its
/// listed forms vanish.
IntegrabilityReport check(const CurvatureTensor& r, const ModelSpace& model, const std::vector<ConditionForm1>& forms1,
                          const std::vector<ConditionForm2>& forms2);

}  // namespace killing
