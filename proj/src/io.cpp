// SPDX-License-Identifier: Apache-2.0
#include "killing/io.hpp"

#include <set>

#include "killing/errors.hpp"

namespace killing {

namespace {

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InvalidArgument("expected a rational string or an integer, got " + j.dump());
}

std::size_t size_field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
  const Json& v = j.at(name);
  if (!v.is_number_integer() || v.get<long>() < 0) {
    throw InvalidArgument(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Tensor tensor_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("tensor literal must be an object");
  const std::size_t dim = size_field(j, "dim");
  const std::size_t order = size_field(j, "order");
  if (dim == 0) throw InvalidArgument("field 'dim' must be positive");
  Tensor t(dim, order);
  if (!j.contains("entries")) return t;
  const Json& entries = j.at("entries");
  if (!entries.is_array()) throw InvalidArgument("field 'entries' must be a list");
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("idx") || !e.contains("val")) {
      throw InvalidArgument("every entry needs 'idx' and 'val'");
    }
    const Json& idx = e.at("idx");
    if (!idx.is_array() || idx.size() != order) {
      throw InvalidArgument("entry index must list " + std::to_string(order) + " slots: " + idx.dump());
    }
    Index i;
    for (const auto& v : idx) {
      if (!v.is_number_integer() || v.get<long>() < 0 || v.get<std::size_t>() >= dim) {
        throw InvalidArgument("entry index out of range: " + idx.dump());
      }
      i.push_back(v.get<std::size_t>());
    }
    const std::size_t flat = t.offset(i);
    if (!seen.insert(flat).second) throw InvalidArgument("repeated entry index " + idx.dump());
    t[flat] = scalar_from_json(e.at("val"));
  }
  return t;
}

Json tensor_to_json(const Tensor& t) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (is_zero(t[k])) continue;
    entries.push_back({{"idx", t.unflatten(k)}, {"val", format_scalar(t[k])}});
  }
  return {{"dim", t.dim()}, {"order", t.order()}, {"entries", std::move(entries)}};
}

TensorDocument parse_tensor_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("tensor file is not valid JSON: ") + e.what());
  }
  TensorDocument doc;
  doc.tensor = tensor_from_json(j);
  if (j.contains("form")) {
    if (!j.at("form").is_string()) throw InvalidArgument("field 'form' must be \"R\" or \"S\"");
    const std::string form = j.at("form").get<std::string>();
    if (form != "R" && form != "S") throw InvalidArgument("field 'form' must be \"R\" or \"S\", got \"" + form + "\"");
    doc.form = form;
  }
  if (j.contains("metadata")) doc.metadata = j.at("metadata");
  return doc;
}

std::string dump_tensor_document(const TensorDocument& doc) {
  Json j = tensor_to_json(doc.tensor);
  if (doc.form) j["form"] = *doc.form;
  j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

CurvatureTensor curvature_from_document(const TensorDocument& doc) {
  if (!doc.form) throw InvalidArgument("tensor file needs a 'form' field (\"R\" or \"S\")");
  if (doc.tensor.order() != 4) throw InvalidArgument("curvature tensors have order 4");
  if (*doc.form == "R") return CurvatureTensor(doc.tensor);
  return s_to_r(SymCurvatureTensor(doc.tensor));
}

TensorDocument curvature_document(const CurvatureTensor& r, Json metadata) {
  return {r.tensor(), "R", std::move(metadata)};
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a list of rationals, got " + j.dump());
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(format_scalar(s));
  return j;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("expected a non-empty list of rows, got " + j.dump());
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("matrix must be square");
  }
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_to_json(m.row(i)));
  return j;
}

ModelSpace model_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("model descriptor must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw InvalidArgument("model descriptor needs 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  MetricSignature sig;
  if (j.contains("signature")) {
    const Json& s = j.at("signature");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer() ||
        s[0].get<int>() < 0 || s[1].get<int>() < 0) {
      throw InvalidArgument("field 'signature' must be [p, q] with non-negative integers");
    }
    sig = {s[0].get<int>(), s[1].get<int>()};
    if (j.contains("N") && size_field(j, "N") != static_cast<std::size_t>(sig.dim())) {
      throw InvalidArgument("field 'N' disagrees with the signature");
    }
  } else {
    sig = {static_cast<int>(size_field(j, "N")), 0};
  }
  if (kind == "sphere") {
    if (j.contains("u")) throw InvalidArgument("field 'u' only applies to the flat model");
    return make_sphere(sig);
  }
  if (kind == "flat") {
    if (j.contains("u")) return make_flat(sig, vector_from_json(j.at("u")));
    return make_flat(sig);
  }
  throw InvalidArgument("field 'kind' must be \"sphere\" or \"flat\", got \"" + kind + "\"");
}

Json model_to_json(const ModelSpace& model) {
  Json j = {{"N", model.dim()},
            {"signature", {model.signature.p, model.signature.q}},
            {"kind", model.flat() ? "flat" : "sphere"}};
  if (model.flat()) j["u"] = vector_to_json(model.u);
  return j;
}

Json report_to_json(const IntegrabilityReport& report) {
  Json forms = Json::array();
  for (const auto& f : report.residual_supports) {
    forms.push_back(
        {{"form", f.form}, {"condition", f.condition}, {"support", f.support}, {"canonical_components", f.canonical_count}});
  }
  return {{"integrable", report.integrable()},
          {"condition1_zero", report.cond1_zero},
          {"condition2_zero", report.cond2_zero},
          {"condition2_forms_conditional", report.cond2_forms_conditional},
          {"forms_used", report.forms_used},
          {"residual_supports", std::move(forms)},
          {"seconds", report.seconds}};
}

Json oracle_report_to_json(const OracleReport& report) {
  Json points = Json::array();
  for (const auto& p : report.points) {
    points.push_back({{"index", p.index},
                      {"seed", p.seed},
                      {"x", vector_to_json(p.x.x)},
                      {"support", {p.support[0], p.support[1], p.support[2]}}});
  }
  Json conditions = Json::array();
  for (std::size_t c = 0; c < 3; ++c) {
    Json cj = {{"condition", c + 1}, {"passes", report.passes[c]}};
    cj["witness_point"] = report.witness[c] ? Json(*report.witness[c]) : Json(nullptr);
    conditions.push_back(std::move(cj));
  }
  return {{"integrable", report.integrable()},
          {"conditions", std::move(conditions)},
          {"points", std::move(points)},
          {"seconds", report.seconds}};
}

}  // namespace killing
