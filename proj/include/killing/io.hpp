// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "killing/curvature.hpp"
#include "killing/integrability.hpp"
#include "killing/models.hpp"
#include "killing/oracle.hpp"
#include "killing/tensor.hpp"

namespace killing {

using Json = nlohmann::ordered_json;

/// Tensor literal: {"dim": N, "order": d, "entries": [{"idx": [..], "val": "p/q"}]}.
/// Unlisted components are zero; a repeated index is rejected.
Tensor tensor_from_json(const Json& j);
/// Lists nonzero components in flat order.
Json tensor_to_json(const Tensor& t);

/// Tensor literal with an optional curvature form ("R" or "S") and free
/// metadata.
struct TensorDocument {
  Tensor tensor;
  std::optional<std::string> form;
  Json metadata = Json::object();
};

/// Throws InvalidArgument describing the first malformed field.
TensorDocument parse_tensor_document(const std::string& text);
std::string dump_tensor_document(const TensorDocument& doc);

/// The curvature tensor in R form, converting from S when needed. Throws
/// InvalidArgument without a form and InvariantViolation when the tensor
/// breaks a relation of its declared form.
CurvatureTensor curvature_from_document(const TensorDocument& doc);
TensorDocument curvature_document(const CurvatureTensor& r, Json metadata = Json::object());

/// Model descriptor: {"N": N, "signature": [p, q], "kind": "sphere" | "flat", "u": [..]}.
/// N is optional when the signature is given and must agree with it.
ModelSpace model_from_json(const Json& j);
Json model_to_json(const ModelSpace& model);

Json report_to_json(const IntegrabilityReport& report);
Json oracle_report_to_json(const OracleReport& report);

/// Vector of rational strings or integers.
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);
/// Square matrix as a list of rows.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

}  // namespace killing
