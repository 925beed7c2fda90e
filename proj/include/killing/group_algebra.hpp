// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "killing/permutation.hpp"
#include "killing/scalar.hpp"
#include "killing/tensor.hpp"

namespace killing {

/// Rational linear combination of permutations of {1..d}. Zero
/// coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::size_t d) : degree_(d) {}
  static GroupAlgebraElement identity(std::size_t d);
  static GroupAlgebraElement of(const Permutation& p, const Scalar& c = Scalar(1));
  /// Parses a signed sum of cycle products, e.g. "e + (12) - (13)(12)".
  static GroupAlgebraElement parse(const std::string& text, std::size_t d);

  std::size_t degree() const { return degree_; }
  const std::map<Permutation, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Permutation& p) const;
  std::size_t size() const { return terms_.size(); }

  void add(const Permutation& p, const Scalar& c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Scalar& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Scalar& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const Scalar& c, GroupAlgebraElement a) { return a *= c; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  std::string to_string() const;

 private:
  std::size_t degree_;
  std::map<Permutation, Scalar> terms_;
};

/// Convolution product extending the group multiplication bilinearly.
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return multiply(a, b);
}

/// Maps every permutation to its inverse, keeping coefficients.
GroupAlgebraElement adjoint(const GroupAlgebraElement& e);

/// Sum of all permutations of the given labels, signed when antisymmetric.
GroupAlgebraElement label_symmetriser(const std::vector<int>& labels, std::size_t d);
GroupAlgebraElement label_antisymmetriser(const std::vector<int>& labels, std::size_t d);

/// Linear action on tensor slots: label k of e addresses slot
/// slot_of_label[k-1] of T. Each permutation acts through permute_slots
/// transported along this dictionary; slots not named stay fixed.
Tensor apply(const GroupAlgebraElement& e, const Tensor& t, const std::vector<std::size_t>& slot_of_label);
/// Same, with label k addressing slot k-1.
Tensor apply(const GroupAlgebraElement& e, const Tensor& t);

}  // namespace killing
