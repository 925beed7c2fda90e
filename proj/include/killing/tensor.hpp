// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "killing/permutation.hpp"
#include "killing/scalar.hpp"

namespace killing {

using Index = std::vector<std::size_t>;
using Vector = std::vector<Scalar>;

/// Dense tensor of order d over a space of dimension N, stored row-major
/// with the first slot varying slowest. An order-0 tensor holds one Scalar.
class Tensor {
 public:
  Tensor() : Tensor(1, 0) {}
  /// Zero tensor.
  Tensor(std::size_t dim, std::size_t order);

  static Tensor scalar(const Scalar& s);
  static Tensor vector(const Vector& v);
  /// Order-2 tensor from a square row-major array.
  static Tensor matrix(const std::vector<Vector>& rows);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return data_.size(); }

  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  Scalar& operator[](std::size_t flat) { return data_[flat]; }
  const Scalar& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
  Scalar& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const Scalar& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  Scalar& at(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::size_t offset(std::span<const std::size_t> idx) const;
  Index unflatten(std::size_t flat) const;
  /// Stride of a slot in the flat array.
  std::size_t stride(std::size_t slot) const;

  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  /// Number of nonzero components.
  std::size_t support() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& c) { return a *= c; }
  friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
  friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  void require_same_shape(const Tensor& o, const char* op) const;

  std::size_t dim_;
  std::size_t order_;
  std::vector<Scalar> data_;
};

/// Calls f(idx) for every multi-index of the given shape, in flat order.
void for_each_index(std::size_t dim, std::size_t order,
                    const std::function<void(const Index&)>& f);

/// Tensor (outer) product, slots of a first.
Tensor outer(const Tensor& a, const Tensor& b);

/// (pi T)_{i_1..i_d} = T_{i_pi(1) .. i_pi(d)}. This is a left action:
/// permute_slots(permute_slots(T, s), p) == permute_slots(T, p * s).
Tensor permute_slots(const Tensor& t, const Permutation& pi);

/// Reindexing by an arbitrary slot map: result_{i} = T_{j} with
/// j[s] = i[source[s]]. source must be a bijection of {0..d-1}.
Tensor reindex(const Tensor& t, const std::vector<std::size_t>& source);

/// Unnormalized sum over all permutations of the given (0-based) slots.
Tensor symmetrise_slots(const Tensor& t, const std::vector<std::size_t>& slots);
/// Unnormalized signed sum over all permutations of the given slots.
Tensor antisymmetrise_slots(const Tensor& t, const std::vector<std::size_t>& slots);

/// Contracts 0-based slots a and b against pairing:
/// result = sum_{p,q} pairing(p,q) T(.. p at a .., .. q at b ..).
Tensor contract(const Tensor& t, std::size_t slot_a, std::size_t slot_b, const Tensor& pairing);

/// Contracts slot s of t with a vector.
Tensor contract_vector(const Tensor& t, std::size_t slot, const Vector& v);

}  // namespace killing
