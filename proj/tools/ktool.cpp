// SPDX-License-Identifier: Apache-2.0
// ktool: integrability checks for Killing tensors on constant curvature
// models. Exit codes: 0 the property holds, 1 it fails, 2 input error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "killing/curvature.hpp"
#include "killing/errors.hpp"
#include "killing/integrability.hpp"
#include "killing/io.hpp"
#include "killing/oracle.hpp"
#include "killing/young.hpp"

using namespace killing;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_argument(const std::string& text, const char* what) {
  const std::string body = !text.empty() && (text.front() == '{' || text.front() == '[') ? text : read_file(text);
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string(what) + " is not valid JSON: " + e.what());
  }
}

// The model from --model, falling back to the generator metadata of the file.
ModelSpace resolve_model(const std::string& model_arg, const TensorDocument& doc) {
  if (!model_arg.empty()) return model_from_json(parse_json_argument(model_arg, "model descriptor"));
  if (doc.metadata.is_object() && doc.metadata.contains("model")) return model_from_json(doc.metadata.at("model"));
  throw InvalidArgument("no model given: pass --model or use a file with model metadata");
}

struct CheckOptions {
  std::string tensor_file;
  std::string model;
  std::vector<std::string> forms1 = {"MAIN1"};
  std::vector<std::string> forms2 = {"MAIN2"};
  bool all_forms = false;
};

int run_check(const CheckOptions& o) {
  const TensorDocument doc = parse_tensor_document(read_file(o.tensor_file));
  const CurvatureTensor r = curvature_from_document(doc);
  const ModelSpace model = resolve_model(o.model, doc);
  std::vector<ConditionForm1> f1;
  std::vector<ConditionForm2> f2;
  if (o.all_forms) {
    for (auto f : all_condition1_forms()) {
      if (f != ConditionForm1::OMEGA || !model.flat()) f1.push_back(f);
    }
    f2 = all_condition2_forms();
  } else {
    for (const auto& name : o.forms1) f1.push_back(parse_condition_form1(name));
    for (const auto& name : o.forms2) f2.push_back(parse_condition_form2(name));
  }
  const IntegrabilityReport report = check(r, model, f1, f2);
  Json out = report_to_json(report);
  out["model"] = model_to_json(model);
  std::cout << out.dump(2) << "\n";
  return report.integrable() ? kHolds : kFails;
}

struct OracleOptions {
  std::string tensor_file;
  std::string model;
  std::size_t points = 10;
  std::uint64_t seed = 1;
};

int run_oracle(const OracleOptions& o) {
  const TensorDocument doc = parse_tensor_document(read_file(o.tensor_file));
  const CurvatureTensor r = curvature_from_document(doc);
  const ModelSpace model = resolve_model(o.model, doc);
  const OracleReport report = integrable_oracle(r_to_s(r), model, o.points, o.seed);
  Json out = oracle_report_to_json(report);
  out["model"] = model_to_json(model);
  out["seed"] = o.seed;
  std::cout << out.dump(2) << "\n";
  return report.integrable() ? kHolds : kFails;
}

struct GenerateOptions {
  std::string kind;
  std::string model_kind = "sphere";
  std::size_t n = 3;
  std::vector<int> signature;
  std::string u;
  std::uint64_t seed = 1;
  std::string a;
  std::string h;
  std::string lambda0 = "1";
  std::string lambda1 = "1";
  std::string lambda2 = "1";
  std::string output;
};

int run_generate(const GenerateOptions& o) {
  Json model_json = {{"kind", o.model_kind}};
  if (o.signature.empty()) {
    model_json["N"] = o.n;
  } else {
    if (o.signature.size() != 2) throw InvalidArgument("--signature takes p,q");
    model_json["signature"] = o.signature;
  }
  if (!o.u.empty()) model_json["u"] = parse_json_argument(o.u, "--u");
  const ModelSpace model = model_from_json(model_json);
  const std::size_t n = model.dim();

  Json meta = {{"generator", o.kind}, {"model", model_to_json(model)}};
  CurvatureTensor r = CurvatureTensor::unchecked(Tensor(n, 4));
  if (o.kind == "metric") {
    r = metric_rep(model);
  } else if (o.kind == "benenti") {
    const Matrix a = o.a.empty()         ? random_invertible(n, o.seed)
                     : o.a == "identity" ? Matrix::identity(n)
                                         : matrix_from_json(parse_json_argument(o.a, "--A"));
    if (a.rows() != n) throw InvalidArgument("--A must be " + std::to_string(n) + "x" + std::to_string(n));
    r = benenti_rep(a, model);
    meta["A"] = matrix_to_json(a);
    if (o.a.empty()) meta["seed"] = o.seed;
  } else if (o.kind == "family") {
    const SymmetricForm h = o.h.empty()
                                ? random_symmetric_form(n, o.seed)
                                : SymmetricForm(matrix_from_json(parse_json_argument(o.h, "--hform")).to_tensor());
    if (h.dim() != n) throw InvalidArgument("--hform must be " + std::to_string(n) + "x" + std::to_string(n));
    const Scalar l0 = parse_scalar(o.lambda0), l1 = parse_scalar(o.lambda1), l2 = parse_scalar(o.lambda2);
    r = family_rep(h, l0, l1, l2, model.metric());
    meta["h"] = matrix_to_json(Matrix::from_tensor(h.tensor()));
    meta["lambda"] = {format_scalar(l0), format_scalar(l1), format_scalar(l2)};
    if (o.h.empty()) meta["seed"] = o.seed;
  } else if (o.kind == "random") {
    r = random_curvature(n, o.seed);
    meta["seed"] = o.seed;
  } else {
    throw InvalidArgument("unknown generator '" + o.kind + "' (metric, benenti, family, random)");
  }
  const std::string text = dump_tensor_document(curvature_document(r, meta));
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw InvalidArgument("cannot write '" + o.output + "'");
    out << text;
  }
  return kHolds;
}

int run_repinfo(const std::string& frame_text, int n) {
  const YoungFrame frame = YoungFrame::parse(frame_text);
  std::cout << "frame " << frame.to_string() << "\n";
  std::cout << "hook lengths\n";
  for (std::size_t r = 0; r < frame.num_rows(); ++r) {
    std::cout << " ";
    for (int c = 0; c < frame.rows()[r]; ++c) std::cout << " " << frame.hook_length(static_cast<int>(r), c);
    std::cout << "\n";
  }
  std::cout << "hook product " << format_scalar(hook_product(frame)) << "\n";
  std::cout << "S_" << frame.size() << " dimension " << format_scalar(sym_irrep_dim(frame)) << "\n";
  if (n > 0) std::cout << "GL(" << n << ") dimension " << format_scalar(gl_irrep_dim(frame, n)) << "\n";
  return kHolds;
}

int run_lr(const std::string& a, const std::string& b) {
  const auto parts = lr_decompose(YoungFrame::parse(a), YoungFrame::parse(b));
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) std::cout << it->first.to_string() << " " << it->second << "\n";
  return kHolds;
}

struct IdentityOptions {
  int n = 3;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
};

int run_identities(const IdentityOptions& o) {
  if (o.n < 2) throw InvalidArgument("--N must be at least 2");
  const std::size_t n = static_cast<std::size_t>(o.n);
  const std::vector<ModelSpace> models = {make_sphere({o.n, 0}), make_flat({o.n, 0})};
  for (std::size_t k = 0; k < o.samples; ++k) {
    const SymCurvatureTensor s = r_to_s(random_curvature(n, o.seed + k));
    for (const auto& m : models) verify_identity_suite(s, gbar(m), o.seed + k);
  }
  std::cout << "identities: " << o.samples << " samples x " << models.size() << " contraction forms passed ("
            << identity_names().size() << " identities each)\n";
  const ModelSpace sphere = make_sphere({o.n, 0});
  const Tensor gb = gbar(sphere);
  const std::size_t family_count = std::max<std::size_t>(1, o.samples / 5);
  for (std::size_t k = 0; k < family_count; ++k) {
    const CurvatureTensor r =
        family_rep(random_symmetric_form(n, o.seed + 1000 + k), Scalar(1, 2), Scalar(-1, 3), Scalar(2), sphere.metric());
    const IntegrabilityReport rep = check(r, sphere);
    if (!rep.integrable()) {
      std::cerr << "family member " << k << " fails the algebraic conditions\n";
      return kFails;
    }
    if (!condition3_residual(r_to_s(r), gb).is_zero()) {
      std::cerr << "identity failed: third-condition redundancy (family member " << k << ")\n";
      return kFails;
    }
  }
  std::cout << "redundancy: third condition vanishes on " << family_count << " family members\n";
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrability of Killing tensors on constant curvature models"};
  app.require_subcommand(1);

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "evaluate the algebraic integrability conditions");
  check_cmd->add_option("tensor_file", check_opts.tensor_file, "tensor file (form R or S)")->required();
  check_cmd->add_option("--model", check_opts.model, "model descriptor: JSON text or file");
  check_cmd->add_option("--forms1", check_opts.forms1, "condition-1 forms")->delimiter(',');
  check_cmd->add_option("--forms2", check_opts.forms2, "condition-2 forms")->delimiter(',');
  check_cmd->add_flag("--all-forms", check_opts.all_forms, "evaluate every applicable form");

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "evaluate the Nijenhuis conditions at sampled points");
  oracle_cmd->add_option("tensor_file", oracle_opts.tensor_file, "tensor file (form R or S)")->required();
  oracle_cmd->add_option("--model", oracle_opts.model, "model descriptor: JSON text or file");
  oracle_cmd->add_option("--points", oracle_opts.points, "number of sample points")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", oracle_opts.seed, "sampling seed");

  GenerateOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "write a curvature tensor file in R form");
  gen_cmd->add_option("kind", gen_opts.kind, "metric | benenti | family | random")
      ->required()
      ->check(CLI::IsMember({"metric", "benenti", "family", "random"}));
  gen_cmd->add_option("--model", gen_opts.model_kind, "sphere | flat")->check(CLI::IsMember({"sphere", "flat"}));
  gen_cmd->add_option("--N", gen_opts.n, "ambient dimension")->check(CLI::Range(2, 12));
  gen_cmd->add_option("--signature", gen_opts.signature, "p,q")->delimiter(',');
  gen_cmd->add_option("--u", gen_opts.u, "flat-model normal as a JSON list");
  gen_cmd->add_option("--seed", gen_opts.seed, "seed for random parameters");
  gen_cmd->add_option("--A", gen_opts.a, "benenti matrix as JSON rows, or 'identity'");
  gen_cmd->add_option("--hform", gen_opts.h, "family form h as JSON rows");
  gen_cmd->add_option("--lambda0", gen_opts.lambda0, "family coefficient of g.g");
  gen_cmd->add_option("--lambda1", gen_opts.lambda1, "family coefficient of h.g");
  gen_cmd->add_option("--lambda2", gen_opts.lambda2, "family coefficient of h.h");
  gen_cmd->add_option("-o,--output", gen_opts.output, "output file (default: standard output)");

  std::string frame;
  int repinfo_n = 0;
  auto* repinfo_cmd = app.add_subcommand("repinfo", "hook lengths and irreducible dimensions of a frame");
  repinfo_cmd->add_option("frame", frame, "frame such as (2,2)")->required();
  repinfo_cmd->add_option("--N", repinfo_n, "dimension for the GL(N) irrep")->check(CLI::NonNegativeNumber);

  std::string lr_a, lr_b;
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson decomposition of two frames");
  lr_cmd->add_option("frame1", lr_a)->required();
  lr_cmd->add_option("frame2", lr_b)->required();

  IdentityOptions id_opts;
  auto* id_cmd = app.add_subcommand("identities", "run the unconditional identity suite on random tensors");
  id_cmd->add_option("--N", id_opts.n, "ambient dimension")->check(CLI::Range(2, 8));
  id_cmd->add_option("--samples", id_opts.samples, "number of random tensors");
  id_cmd->add_option("--seed", id_opts.seed, "first seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return run_check(check_opts);
    if (*oracle_cmd) return run_oracle(oracle_opts);
    if (*gen_cmd) return run_generate(gen_opts);
    if (*repinfo_cmd) return run_repinfo(frame, repinfo_n);
    if (*lr_cmd) return run_lr(lr_a, lr_b);
    if (*id_cmd) return run_identities(id_opts);
  } catch (const InvariantViolation& e) {
    std::cerr << "error: tensor violates " << e.tag() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity failed: " << e.tag() << ": " << e.what() << "\n";
    return kFails;
  } catch (const UnsupportedForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SamplingFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
