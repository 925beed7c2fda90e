// SPDX-License-Identifier: Apache-2.0
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "killing/curvature.hpp"
#include "killing/group_algebra.hpp"
#include "killing/integrability.hpp"
#include "killing/killing_fields.hpp"
#include "killing/linalg.hpp"
#include "killing/models.hpp"
#include "killing/oracle.hpp"
#include "killing/random.hpp"
#include "killing/young.hpp"

namespace {

using namespace killing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string count(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

Vector random_tangent(const TangentBasis& basis, Rng& rng) {
  Vector v(basis.vectors.front().size(), Scalar(0));
  for (const auto& e : basis.vectors) {
    const Scalar c = rng.rational(3);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * e[i];
  }
  return v;
}

Matrix operator_matrix(const std::function<Tensor(const Tensor&)>& op, std::size_t n, std::size_t order) {
  const std::size_t size = Tensor(n, order).size();
  Matrix m(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    Tensor basis(n, order);
    basis[col] = 1;
    const Tensor image = op(basis);
    for (std::size_t row = 0; row < size; ++row) m(row, col) = image[row];
  }
  return m;
}

std::vector<ModelSpace> models_for(int n) {
  return {make_sphere({n, 0}), make_sphere({n - 1, 1}), make_flat({n, 0})};
}

// ---------------------------------------------------------------- fixtures

struct Fixture {
  std::string kind;  // metric | benenti | family | random
  int n = 0;
  ModelSpace model;
  CurvatureTensor r;
  bool structured() const { return kind != "random"; }
  std::string label() const { return kind + " " + model.describe(); }
};

std::vector<Fixture> fixture_set() {
  std::vector<Fixture> out;
  for (int n = 3; n <= 4; ++n) {
    const auto dim = static_cast<std::size_t>(n);
    for (const auto& model : models_for(n)) {
      out.push_back({"metric", n, model, metric_rep(model)});
      for (std::uint64_t k = 0; k < 10; ++k) {
        const std::uint64_t seed = 1000 * static_cast<std::uint64_t>(n) + k;
        out.push_back({"benenti", n, model, benenti_rep(random_invertible(dim, seed), model)});
        Rng rng(seed);
        const SymmetricForm h = random_symmetric_form(dim, seed + 500);
        const Scalar l0 = rng.rational(3), l1 = rng.rational(3), l2 = rng.rational(3);
        out.push_back({"family", n, model, family_rep(h, l0, l1, l2, model.metric())});
        out.push_back({"random", n, model, random_curvature(dim, seed + 900)});
      }
    }
  }
  return out;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> set = fixture_set();
  return set;
}

std::vector<ConditionForm1> forms1_for(const ModelSpace& model) {
  std::vector<ConditionForm1> forms;
  for (auto f : all_condition1_forms()) {
    if (f == ConditionForm1::OMEGA && model.flat()) continue;
    forms.push_back(f);
  }
  return forms;
}

const std::vector<IntegrabilityReport>& full_reports() {
  static const std::vector<IntegrabilityReport> reports = [] {
    std::vector<IntegrabilityReport> out;
    for (const auto& f : fixtures()) out.push_back(check(f.r, f.model, forms1_for(f.model), all_condition2_forms()));
    return out;
  }();
  return reports;
}

// ---------------------------------------------------------------- criteria

Outcome young_expansion() {
  const auto tau = young_symmetriser(YoungTableau::parse("[[1,2],[3,4]]"));
  const auto printed = GroupAlgebraElement::parse(
      "e + (12) + (34) - (13) - (24) + (12)(34) + (13)(24) - (132) - (234)"
      " - (124) - (143) + (1423) + (1324) - (1234) - (1432) + (14)(23)",
      4);
  const auto starred = GroupAlgebraElement::parse("e - (13)", 4) * GroupAlgebraElement::parse("e - (24)", 4) *
                       GroupAlgebraElement::parse("e + (12)", 4) * GroupAlgebraElement::parse("e + (34)", 4);
  Outcome o;
  o.pass = tau == printed && adjoint(tau) == starred && tau.size() == 16;
  o.detail = std::to_string(tau.size()) + " terms; expansion " + (tau == printed ? "matches" : "differs") +
             "; adjoint " + (adjoint(tau) == starred ? "matches" : "differs");
  return o;
}

Outcome young_square() {
  Rng rng(2024);
  std::size_t checked = 0, good = 0;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& frame : partitions(d)) {
      std::vector<YoungTableau> tabs = {YoungTableau::row_reading(frame)};
      for (int k = 0; k < 5; ++k) {
        std::vector<int> labels(static_cast<std::size_t>(d));
        std::iota(labels.begin(), labels.end(), 1);
        for (std::size_t i = labels.size(); i > 1; --i)
          std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
        std::vector<std::vector<int>> rows;
        std::size_t next = 0;
        for (int len : frame.rows()) {
          rows.emplace_back(labels.begin() + static_cast<long>(next), labels.begin() + static_cast<long>(next + len));
          next += static_cast<std::size_t>(len);
        }
        tabs.emplace_back(rows);
      }
      for (const auto& tab : tabs) {
        const auto tau = young_symmetriser(tab);
        ++checked;
        if (tau * tau == tau * hook_product(frame)) ++good;
      }
    }
  }
  return {good == checked, count(good, checked) + " tableaux satisfy tau^2 = hook * tau"};
}

Outcome hook_dimensions() {
  std::vector<Scalar> dims;
  std::string shown;
  for (const auto& f : partitions(4)) {
    dims.push_back(sym_irrep_dim(f));
    shown += f.to_string() + "->" + format_scalar(dims.back()) + " ";
  }
  return {dims == std::vector<Scalar>{1, 3, 2, 3, 1}, shown};
}

Outcome lr_examples() {
  auto frames = [](std::initializer_list<const char*> texts) {
    std::map<YoungFrame, int> m;
    for (const char* t : texts) m[YoungFrame::parse(t)] = 1;
    return m;
  };
  const bool a = lr_decompose(YoungFrame::parse("(2)"), YoungFrame::parse("(2)")) == frames({"(4)", "(3,1)", "(2,2)"});
  const bool b = lr_decompose(YoungFrame::parse("(1,1)"), YoungFrame::parse("(1,1)")) ==
                 frames({"(2,2)", "(2,1,1)", "(1,1,1,1)"});
  const bool c =
      lr_decompose(YoungFrame::parse("(1,1,1)"), YoungFrame::parse("(3)")) == frames({"(4,1,1)", "(3,1,1,1)"});
  return {a && b && c, std::string("2x2 ") + (a ? "ok" : "bad") + ", 11x11 " + (b ? "ok" : "bad") + ", 111x3 " +
                           (c ? "ok" : "bad")};
}

Outcome projector_rank() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::size_t r = rank(operator_matrix([](const Tensor& t) { return project_to_curvature(t).tensor(); }, n, 4));
    const Scalar expected = Scalar(static_cast<long>((n - 1) * n * n * (n + 1))) / 12;
    o.pass = o.pass && Scalar(static_cast<long>(r)) == expected;
    o.detail += "N=" + std::to_string(n) + ": rank " + std::to_string(r) + " (expected " + format_scalar(expected) + ") ";
  }
  return o;
}

Outcome roundtrip() {
  std::size_t good = 0, total = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const CurvatureTensor r = random_curvature(n, seed);
      const SymCurvatureTensor s = r_to_s(random_curvature(n, seed + 100));
      total += 2;
      if (s_to_r(r_to_s(r)) == r) ++good;
      if (r_to_s(s_to_r(s)) == s) ++good;
    }
  }
  return {good == total, count(good, total) + " roundtrips exact"};
}

Outcome identity_suite() {
  std::size_t good = 0, total = 0;
  std::string failures;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& model : {make_sphere({n, 0}), make_flat({n, 0})}) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SymCurvatureTensor s = r_to_s(random_curvature(static_cast<std::size_t>(n), 7000 + seed));
        ++total;
        try {
          if (verify_identity_suite(s, gbar(model), seed + 1).passed == identity_names()) ++good;
        } catch (const std::exception& e) {
          if (failures.empty()) failures = std::string("; first failure: ") + e.what();
        }
      }
    }
  }
  return {good == total, count(good, total) + " samples (sphere and flat gbar, N=2,3,4)" + failures};
}

Outcome family_conditions() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    const auto dim = static_cast<std::size_t>(n);
    for (const auto& model : models_for(n)) {
      std::size_t good = 0;
      std::map<std::string, std::size_t> failed_forms;
      for (std::uint64_t k = 0; k < 10; ++k) {
        const std::uint64_t seed = 300 * static_cast<std::uint64_t>(n) + k;
        Rng rng(seed);
        const SymmetricForm h = random_symmetric_form(dim, seed + 1);
        const Scalar l0 = rng.rational(3), l1 = rng.rational(3), l2 = rng.rational(3);
        const auto report =
            check(family_rep(h, l0, l1, l2, model.metric()), model, forms1_for(model), all_condition2_forms());
        bool all_zero = true;
        for (const auto& r : report.residual_supports) {
          if (r.support != 0) {
            all_zero = false;
            ++failed_forms[r.form];
          }
        }
        if (all_zero) ++good;
      }
      if (good != 10) {
        o.pass = false;
        o.detail += model.describe() + ": " + count(good, 10) + " (nonzero forms:";
        for (const auto& [form, c] : failed_forms) o.detail += " " + form + "x" + std::to_string(c);
        o.detail += "); ";
      }
    }
  }
  if (o.pass) o.detail = "all 90 family tensors have zero residuals in every form";
  return o;
}

Outcome oracle_agreement() {
  std::size_t agree = 0, structured = 0, structured_pass = 0, random = 0, random_fail = 0;
  std::map<std::string, std::size_t> structured_misses, random_misses;
  std::vector<std::string> disagreements;
  for (std::size_t i = 0; i < fixtures().size(); ++i) {
    const Fixture& f = fixtures()[i];
    const bool algebraic = full_reports()[i].integrable();
    const bool oracle = integrable_oracle(r_to_s(f.r), f.model, 10, 11 + i).integrable();
    if (algebraic == oracle) {
      ++agree;
    } else {
      disagreements.push_back(f.label());
    }
    const std::string where = f.model.describe();
    if (f.structured()) {
      ++structured;
      if (algebraic) {
        ++structured_pass;
      } else {
        ++structured_misses[f.kind + " " + where];
      }
    } else {
      ++random;
      if (!algebraic) {
        ++random_fail;
      } else {
        ++random_misses[where];
      }
    }
  }
  Outcome o;
  o.pass = agree == fixtures().size() && structured_pass == structured && random_fail == random;
  o.detail = "verdict agreement " + count(agree, fixtures().size()) + "; structured pass " +
             count(structured_pass, structured) + "; random fail " + count(random_fail, random);
  for (const auto& d : disagreements) o.detail += "; disagreement: " + d;
  for (const auto& [k, c] : structured_misses) o.detail += "; not integrable: " + k + " x" + std::to_string(c);
  for (const auto& [k, c] : random_misses) o.detail += "; integrable random: " + k + " x" + std::to_string(c);
  return o;
}

Outcome third_condition() {
  std::size_t good = 0, total = 0;
  for (std::size_t i = 0; i < fixtures().size(); ++i) {
    if (!full_reports()[i].integrable()) continue;
    const Fixture& f = fixtures()[i];
    ++total;
    if (condition3_residual(r_to_s(f.r), gbar(f.model)).is_zero()) ++good;
  }
  return {good == total && total > 0, count(good, total) + " inputs passing conditions 1-2 have zero condition 3"};
}

Outcome killing_equation() {
  std::size_t good = 0, total = 0;
  for (int n = 3; n <= 4; ++n) {
    for (const auto& model : {make_sphere({n, 0}), make_flat({n, 0})}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SymCurvatureTensor s = r_to_s(random_curvature(static_cast<std::size_t>(n), 4000 + seed));
        Rng rng(seed);
        for (std::uint64_t p = 0; p < 5; ++p) {
          const Vector x = sample_point(model, 97 * seed + p).x;
          const TangentBasis basis = tangent_basis(model, x);
          const Vector a = random_tangent(basis, rng), b = random_tangent(basis, rng), c = random_tangent(basis, rng);
          auto d = [&](const Vector& u, const Vector& v, const Vector& w) {
            return killing_cov_deriv(s, model, x, u, v, w);
          };
          ++total;
          if (d(a, b, c) + d(b, c, a) + d(c, a, b) + d(a, c, b) + d(c, b, a) + d(b, a, c) == 0) ++good;
        }
      }
    }
  }
  return {good == total, count(good, total) + " symmetrised covariant derivatives vanish"};
}

Scalar benenti_closed_form(const Matrix& a, const ModelSpace& model, const Vector& x, const Vector& v,
                           const Vector& w) {
  const Tensor g = model.metric();
  const Vector ax = a * x, av = a * v, aw = a * w;
  if (!model.flat()) return bilinear(g, ax, ax) * bilinear(g, av, aw) - bilinear(g, ax, av) * bilinear(g, ax, aw);
  const Vector& u = model.u;
  return bilinear(g, ax, u) * bilinear(g, ax, u) * bilinear(g, av, aw) -
         bilinear(g, ax, u) * bilinear(g, ax, av) * bilinear(g, aw, u) -
         bilinear(g, ax, u) * bilinear(g, ax, aw) * bilinear(g, av, u) +
         bilinear(g, ax, ax) * bilinear(g, av, u) * bilinear(g, aw, u);
}

Outcome benenti_concordance() {
  Outcome o;
  for (const auto& model : {make_sphere({3, 0}), make_flat({3, 0})}) {
    std::size_t consistent = 0;
    std::string ratios;
    for (std::uint64_t k = 0; k < 5; ++k) {
      const Matrix a = random_invertible(3, 60 + k);
      const SymCurvatureTensor s = r_to_s(benenti_rep(a, model));
      std::optional<Scalar> ratio;
      bool ok = true;
      Rng rng(k);
      for (std::uint64_t p = 0; p < 5; ++p) {
        const Vector x = sample_point(model, 31 * k + p).x;
        const TangentBasis basis = tangent_basis(model, x);
        for (int pair = 0; pair < 5; ++pair) {
          const Vector v = random_tangent(basis, rng), w = random_tangent(basis, rng);
          const Scalar expected = benenti_closed_form(a, model, x, v, w);
          const Scalar value = killing_eval(s, model, x, v, w);
          if (expected == 0) {
            ok = ok && value == 0;
            continue;
          }
          if (!ratio) ratio = value / expected;
          ok = ok && value == *ratio * expected;
        }
      }
      if (ok && ratio) ++consistent;
      ratios += ratio ? format_scalar(*ratio) + " " : "none ";
    }
    o.pass = o.pass && consistent == 5;
    o.detail += model.describe() + ": " + count(consistent, 5) + " matrices with one constant (" + ratios + "); ";
  }
  // Flat metric sign: the Kulkarni-Nomizu sign against the printed component sign.
  const auto flat = make_flat({3, 0});
  const Tensor g = flat.metric();
  const Vector& u = flat.u;
  Tensor printed(3, 4);
  for_each_index(3, 4, [&](const Index& i) {
    const std::size_t a1 = i[0], b1 = i[1], a2 = i[2], b2 = i[3];
    printed.at(i) = u[a1] * u[a2] * g.at({b1, b2}) - u[a1] * u[b2] * g.at({b1, a2}) -
                    u[b1] * u[a2] * g.at({a1, b2}) - u[b1] * u[b2] * g.at({a1, a2});
  });
  const auto printed_violation = curvature_violation(printed);
  bool plus_reproduces_metric = true;
  Rng rng(5);
  for (std::uint64_t p = 0; p < 5; ++p) {
    const Vector x = sample_point(flat, p).x;
    const TangentBasis basis = tangent_basis(flat, x);
    const Vector v = random_tangent(basis, rng), w = random_tangent(basis, rng);
    plus_reproduces_metric = plus_reproduces_metric && killing_eval_r(metric_rep(flat), flat, x, v, w) == bilinear(g, v, w);
  }
  o.pass = o.pass && plus_reproduces_metric && printed_violation.has_value();
  o.detail += std::string("flat sign: + reproduces g(v,w) ") + (plus_reproduces_metric ? "yes" : "no") +
              ", printed - sign " + (printed_violation ? "breaks " + *printed_violation : "is a curvature tensor");
  return o;
}

Outcome scalar_curvature_remark() {
  std::size_t good = 0, total = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto model = make_sphere({static_cast<int>(n), 0});
    const Tensor g = model.metric();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SymmetricForm h = random_symmetric_form(n, 800 + seed);
      Scalar trace = 0;
      for (std::size_t i = 0; i < n; ++i) trace += h.tensor().at({i, i});
      ++total;
      if (scalar_curvature(kulkarni_nomizu(h, SymmetricForm(g)), g) == 2 * Scalar(static_cast<long>(n - 1)) * trace)
        ++good;
      const Matrix a = random_invertible(n, 900 + seed);
      auto squared_sum = [](const Matrix& m) {
        Scalar s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
        return s;
      };
      const Scalar norm = squared_sum(a);
      ++total;
      if (scalar_curvature(benenti_rep(a, model), g) == norm * norm - squared_sum(a.transpose() * a)) ++good;
    }
  }
  return {good == total, count(good, total) + " identities exact"};
}

Outcome form_equivalence() {
  std::size_t good = 0;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < fixtures().size(); ++i) {
    const auto& report = full_reports()[i];
    bool ok = true;
    for (const auto& r : report.residual_supports) {
      if (r.condition == 1) ok = ok && (r.support == 0) == report.cond1_zero;
      if (r.condition == 2) ok = ok && (r.support == 0) == report.cond2_zero;
    }
    if (ok) {
      ++good;
    } else {
      bad.push_back(fixtures()[i].label());
    }
  }
  Outcome o{good == fixtures().size(), count(good, fixtures().size()) + " fixtures with agreeing verdicts across forms"};
  for (const auto& b : bad) o.detail += "; disagreement: " + b;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"young symmetriser [[1,2],[3,4]] and adjoint expansions", young_expansion},
      {"tau^2 = hook * tau for d <= 5", young_square},
      {"hook dimensions of the partitions of 4", hook_dimensions},
      {"Littlewood-Richardson examples", lr_examples},
      {"curvature projector rank", projector_rank},
      {"R <-> S roundtrip", roundtrip},
      {"unconditional identity suite", identity_suite},
      {"family tensors satisfy conditions 1 and 2 in every form", family_conditions},
      {"algebraic verdict agrees with the Nijenhuis oracle", oracle_agreement},
      {"third condition is redundant", third_condition},
      {"symmetrised Killing equation", killing_equation},
      {"Benenti concordance and flat metric sign", benenti_concordance},
      {"scalar curvature identities", scalar_curvature_remark},
      {"condition form equivalence", form_equivalence},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failed;
    std::printf("%s %2zu %s: %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
