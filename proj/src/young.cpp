// SPDX-License-Identifier: Apache-2.0
#include "killing/young.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "killing/errors.hpp"

namespace killing {

namespace {

// Splits "(a,b,...)" or "[a,b,...]" style integer lists.
std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw InvalidArgument("expected a list in " + std::string(1, open) + "..." + std::string(1, close) +
                          ", got '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidArgument("malformed integer '" + tok + "' in '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

YoungFrame::YoungFrame(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] <= 0) throw InvalidArgument("Young frame rows must be positive");
    if (r > 0 && rows_[r] > rows_[r - 1]) throw InvalidArgument("Young frame rows must be weakly decreasing");
  }
}

YoungFrame YoungFrame::parse(std::string_view text) { return YoungFrame(parse_int_list(text, '(', ')')); }

std::size_t YoungFrame::size() const {
  std::size_t n = 0;
  for (int r : rows_) n += static_cast<std::size_t>(r);
  return n;
}

int YoungFrame::column_length(int c) const {
  int len = 0;
  for (int r : rows_) {
    if (r > c) ++len;
  }
  return len;
}

int YoungFrame::hook_length(int r, int c) const {
  return (rows_[static_cast<std::size_t>(r)] - c - 1) + 1 + (column_length(c) - r - 1);
}

std::string YoungFrame::to_string() const {
  std::string out = "(";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += ",";
    out += std::to_string(rows_[r]);
  }
  return out + ")";
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  std::vector<int> labels;
  for (const auto& row : rows_) {
    lengths.push_back(static_cast<int>(row.size()));
    labels.insert(labels.end(), row.begin(), row.end());
  }
  frame_ = YoungFrame(lengths);
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] != static_cast<int>(k + 1)) throw InvalidArgument("tableau labels must be a permutation of 1..d");
  }
}

YoungTableau YoungTableau::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') throw InvalidArgument("malformed tableau '" + s + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    const auto close = s.find(']', pos);
    if (s[pos] != '[' || close == std::string::npos) throw InvalidArgument("malformed tableau row in '" + s + "'");
    rows.push_back(parse_int_list(s.substr(pos, close - pos + 1), '[', ']'));
    pos = close + 1;
  }
  return YoungTableau(rows);
}

YoungTableau YoungTableau::row_reading(const YoungFrame& frame) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : frame.rows()) {
    std::vector<int> row;
    for (int c = 0; c < len; ++c) row.push_back(next++);
    rows.push_back(row);
  }
  return YoungTableau(rows);
}

std::vector<std::vector<int>> YoungTableau::columns() const {
  std::vector<std::vector<int>> cols;
  if (rows_.empty()) return cols;
  for (std::size_t c = 0; c < rows_.front().size(); ++c) {
    std::vector<int> col;
    for (const auto& row : rows_) {
      if (c < row.size()) col.push_back(row[c]);
    }
    cols.push_back(col);
  }
  return cols;
}

std::string YoungTableau::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += ",";
    out += "[";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ",";
      out += std::to_string(rows_[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<YoungFrame>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungFrame> partitions(int d) {
  std::vector<YoungFrame> out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, out);
  return out;
}

Scalar hook_product(const YoungFrame& frame) {
  Scalar p(1);
  for (std::size_t r = 0; r < frame.num_rows(); ++r) {
    for (int c = 0; c < frame.rows()[r]; ++c) p *= frame.hook_length(static_cast<int>(r), c);
  }
  return p;
}

Scalar sym_irrep_dim(const YoungFrame& frame) {
  return factorial(static_cast<unsigned>(frame.size())) / hook_product(frame);
}

Scalar gl_irrep_dim(const YoungFrame& frame, int n) {
  if (n < 1) throw InvalidArgument("GL dimension requires N >= 1");
  Scalar p(1);
  for (std::size_t r = 0; r < frame.num_rows(); ++r) {
    for (int c = 0; c < frame.rows()[r]; ++c) p *= (c + 1) + n - static_cast<int>(r + 1);
  }
  return p / hook_product(frame);
}

GroupAlgebraElement young_symmetriser(const YoungTableau& tab) {
  const std::size_t d = tab.size();
  GroupAlgebraElement rows = GroupAlgebraElement::identity(d);
  for (const auto& row : tab.rows()) rows = multiply(rows, label_symmetriser(row, d));
  GroupAlgebraElement cols = GroupAlgebraElement::identity(d);
  for (const auto& col : tab.columns()) cols = multiply(cols, label_antisymmetriser(col, d));
  return multiply(rows, cols);
}

GroupAlgebraElement young_projector(const YoungTableau& tab) {
  return young_symmetriser(tab) * (Scalar(1) / hook_product(tab.frame()));
}

namespace {

using Filling = std::vector<std::vector<int>>;  // 0 marks boxes of the first frame

bool reverse_reading_is_lattice(const Filling& f, int max_label) {
  std::vector<int> count(static_cast<std::size_t>(max_label) + 1, 0);
  for (const auto& row : f) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int l = *it;
      if (l == 0) continue;
      ++count[static_cast<std::size_t>(l)];
      if (l > 1 && count[static_cast<std::size_t>(l)] > count[static_cast<std::size_t>(l - 1)]) return false;
    }
  }
  return true;
}

}  // namespace

std::map<YoungFrame, int> lr_decompose(const YoungFrame& lambda1, const YoungFrame& lambda2) {
  Filling start;
  for (int len : lambda1.rows()) start.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> sequence;
  for (std::size_t r = 0; r < lambda2.num_rows(); ++r) {
    for (int c = 0; c < lambda2.rows()[r]; ++c) sequence.push_back(static_cast<int>(r + 1));
  }
  std::set<Filling> layer{start};
  for (int label : sequence) {
    std::set<Filling> next;
    for (const auto& f : layer) {
      for (std::size_t r = 0; r <= f.size(); ++r) {
        const std::size_t len = r < f.size() ? f[r].size() : 0;
        if (r > 0 && len >= f[r - 1].size()) continue;
        bool clash = false;
        for (const auto& row : f) {
          if (len < row.size() && row[len] == label) clash = true;
        }
        if (clash) continue;
        Filling g = f;
        if (r == g.size()) g.emplace_back();
        g[r].push_back(label);
        next.insert(std::move(g));
      }
    }
    layer = std::move(next);
  }
  std::map<YoungFrame, int> out;
  const int max_label = static_cast<int>(lambda2.num_rows());
  for (const auto& f : layer) {
    if (!reverse_reading_is_lattice(f, max_label)) continue;
    std::vector<int> shape;
    for (const auto& row : f) shape.push_back(static_cast<int>(row.size()));
    ++out[YoungFrame(shape)];
  }
  return out;
}

}  // namespace killing
