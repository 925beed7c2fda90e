// SPDX-License-Identifier: Apache-2.0
#include "killing/group_algebra.hpp"

#include <cctype>
#include <numeric>

#include "killing/errors.hpp"

namespace killing {

GroupAlgebraElement GroupAlgebraElement::identity(std::size_t d) { return of(Permutation(d)); }

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Scalar& c) {
  GroupAlgebraElement e(p.degree());
  e.add(p, c);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::parse(const std::string& text, std::size_t d) {
  GroupAlgebraElement e(d);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) return e;
  while (pos < text.size()) {
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Scalar coeff = start == pos ? Scalar(1) : parse_scalar(text.substr(start, pos - start));
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
    }
    start = pos;
    int depth = 0;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '+' || c == '-')) break;
      ++pos;
    }
    std::string body = text.substr(start, pos - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    if (body.empty()) throw InvalidArgument("missing permutation in group algebra literal");
    e.add(Permutation::from_cycles(body, d), coeff * sign);
  }
  return e;
}

Scalar GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Scalar& c) {
  if (p.degree() != degree_) throw InvalidArgument("permutation degree differs from group algebra degree");
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.degree_ != degree_) throw InvalidArgument("adding group algebra elements of different degree");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (o.degree_ != degree_) throw InvalidArgument("subtracting group algebra elements of different degree");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Scalar& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Scalar mag = abs(c);
    if (mag != 1) out += format_scalar(mag) + "*";
    out += p.to_cycles();
  }
  return out;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("multiplying group algebra elements of different degree");
  GroupAlgebraElement r(a.degree());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) r.add(p * q, c * d);
  }
  return r;
}

GroupAlgebraElement adjoint(const GroupAlgebraElement& e) {
  GroupAlgebraElement r(e.degree());
  for (const auto& [p, c] : e.terms()) r.add(p.inverse(), c);
  return r;
}

namespace {

GroupAlgebraElement label_group_sum(const std::vector<int>& labels, std::size_t d, bool signed_sum) {
  std::vector<bool> seen(d, false);
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > d || seen[static_cast<std::size_t>(l - 1)]) {
      throw InvalidArgument("labels of a (anti)symmetriser must be distinct and within 1..d");
    }
    seen[static_cast<std::size_t>(l - 1)] = true;
  }
  GroupAlgebraElement r(d);
  for (const auto& rho : all_permutations(labels.size())) {
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      images[static_cast<std::size_t>(labels[k] - 1)] = labels[static_cast<std::size_t>(rho(static_cast<int>(k + 1)) - 1)];
    }
    r.add(Permutation::from_images(images), Scalar(signed_sum ? rho.sign() : 1));
  }
  return r;
}

}  // namespace

GroupAlgebraElement label_symmetriser(const std::vector<int>& labels, std::size_t d) {
  return label_group_sum(labels, d, false);
}

GroupAlgebraElement label_antisymmetriser(const std::vector<int>& labels, std::size_t d) {
  return label_group_sum(labels, d, true);
}

Tensor apply(const GroupAlgebraElement& e, const Tensor& t, const std::vector<std::size_t>& slot_of_label) {
  const std::size_t d = e.degree();
  if (slot_of_label.size() != d) throw InvalidArgument("label dictionary does not cover every label");
  std::vector<bool> used(t.order(), false);
  for (std::size_t s : slot_of_label) {
    if (s >= t.order()) throw InvalidArgument("label dictionary names a slot outside the tensor");
    if (used[s]) throw InvalidArgument("label dictionary is not injective");
    used[s] = true;
  }
  Tensor r(t.dim(), t.order());
  for (const auto& [pi, c] : e.terms()) {
    std::vector<std::size_t> source(t.order());
    std::iota(source.begin(), source.end(), std::size_t{0});
    for (std::size_t k = 0; k < d; ++k) {
      source[slot_of_label[k]] = slot_of_label[static_cast<std::size_t>(pi(static_cast<int>(k + 1)) - 1)];
    }
    r += reindex(t, source) * c;
  }
  return r;
}

Tensor apply(const GroupAlgebraElement& e, const Tensor& t) {
  std::vector<std::size_t> slots(e.degree());
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  return apply(e, t, slots);
}

}  // namespace killing
