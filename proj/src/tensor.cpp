// SPDX-License-Identifier: Apache-2.0
#include "killing/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "killing/errors.hpp"

namespace killing {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t order) : dim_(dim), order_(order) {
  if (dim == 0) throw InvalidArgument("tensor dimension must be positive");
  data_.assign(ipow(dim, order), Scalar(0));
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t(1, 0);
  t.data_[0] = s;
  return t;
}

Tensor Tensor::vector(const Vector& v) {
  Tensor t(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) t.data_[i] = v[i];
  return t;
}

Tensor Tensor::matrix(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  Tensor t(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidArgument("matrix literal is not square");
    for (std::size_t j = 0; j < n; ++j) t.data_[i * n + j] = rows[i][j];
  }
  return t;
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != order_) {
    throw InvalidArgument("index of length " + std::to_string(idx.size()) + " for tensor of order " +
                          std::to_string(order_));
  }
  std::size_t off = 0;
  for (std::size_t i : idx) {
    if (i >= dim_) throw InvalidArgument("index component out of range");
    off = off * dim_ + i;
  }
  return off;
}

Index Tensor::unflatten(std::size_t flat) const {
  Index idx(order_);
  for (std::size_t s = order_; s-- > 0;) {
    idx[s] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

std::size_t Tensor::stride(std::size_t slot) const { return ipow(dim_, order_ - 1 - slot); }

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return killing::is_zero(s); });
}

std::size_t Tensor::support() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !killing::is_zero(s); }));
}

void Tensor::require_same_shape(const Tensor& o, const char* op) const {
  if (dim_ != o.dim_ || order_ != o.order_) {
    throw InvalidArgument(std::string("shape mismatch in tensor ") + op);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(o, "addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(o, "subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.dim_ == b.dim_ && a.order_ == b.order_ && a.data_ == b.data_;
}

void for_each_index(std::size_t dim, std::size_t order, const std::function<void(const Index&)>& f) {
  Index idx(order, 0);
  const std::size_t total = ipow(dim, order);
  for (std::size_t n = 0; n < total; ++n) {
    f(idx);
    for (std::size_t s = order; s-- > 0;) {
      if (++idx[s] < dim) break;
      idx[s] = 0;
    }
  }
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim() && a.order() > 0 && b.order() > 0) throw InvalidArgument("outer product of different dims");
  const std::size_t dim = a.order() > 0 ? a.dim() : b.dim();
  Tensor r(dim, a.order() + b.order());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[k++] = a[i] * b[j];
  }
  return r;
}

Tensor reindex(const Tensor& t, const std::vector<std::size_t>& source) {
  const std::size_t d = t.order();
  if (source.size() != d) throw InvalidArgument("slot map length differs from tensor order");
  std::vector<bool> seen(d, false);
  for (std::size_t s : source) {
    if (s >= d || seen[s]) throw InvalidArgument("slot map is not a bijection");
    seen[s] = true;
  }
  // Offset of T_j with j[s] = i[source[s]] is sum_t i[t] * step[t].
  std::vector<std::size_t> step(d);
  for (std::size_t s = 0; s < d; ++s) step[source[s]] = t.stride(s);
  Tensor r(t.dim(), d);
  Index idx(d, 0);
  std::size_t src = 0;
  for (std::size_t n = 0; n < r.size(); ++n) {
    r[n] = t[src];
    for (std::size_t s = d; s-- > 0;) {
      if (++idx[s] < t.dim()) {
        src += step[s];
        break;
      }
      src -= step[s] * (t.dim() - 1);
      idx[s] = 0;
    }
  }
  return r;
}

Tensor permute_slots(const Tensor& t, const Permutation& pi) {
  if (pi.degree() != t.order()) throw InvalidArgument("permutation degree differs from tensor order");
  std::vector<std::size_t> source(t.order());
  for (std::size_t s = 0; s < t.order(); ++s) source[s] = static_cast<std::size_t>(pi(static_cast<int>(s + 1)) - 1);
  return reindex(t, source);
}

namespace {

Tensor slot_group_sum(const Tensor& t, const std::vector<std::size_t>& slots, bool signed_sum) {
  std::vector<std::size_t> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("repeated slot in (anti)symmetrisation");
  }
  for (std::size_t s : slots) {
    if (s >= t.order()) throw InvalidArgument("slot out of range in (anti)symmetrisation");
  }
  Tensor r(t.dim(), t.order());
  for (const auto& rho : all_permutations(slots.size())) {
    std::vector<std::size_t> source(t.order());
    std::iota(source.begin(), source.end(), std::size_t{0});
    for (std::size_t k = 0; k < slots.size(); ++k) {
      source[slots[k]] = slots[static_cast<std::size_t>(rho(static_cast<int>(k + 1)) - 1)];
    }
    Tensor term = reindex(t, source);
    if (signed_sum && rho.sign() < 0) {
      r -= term;
    } else {
      r += term;
    }
  }
  return r;
}

}  // namespace

Tensor symmetrise_slots(const Tensor& t, const std::vector<std::size_t>& slots) {
  return slot_group_sum(t, slots, false);
}

Tensor antisymmetrise_slots(const Tensor& t, const std::vector<std::size_t>& slots) {
  return slot_group_sum(t, slots, true);
}

Tensor contract(const Tensor& t, std::size_t slot_a, std::size_t slot_b, const Tensor& pairing) {
  if (slot_a == slot_b || slot_a >= t.order() || slot_b >= t.order()) {
    throw InvalidArgument("contraction slots must be distinct and in range");
  }
  if (pairing.order() != 2 || pairing.dim() != t.dim()) {
    throw InvalidArgument("pairing must be an order-2 tensor of matching dimension");
  }
  const std::size_t n = t.dim();
  Tensor r(n, t.order() - 2);
  Index full(t.order());
  for (std::size_t flat = 0; flat < r.size(); ++flat) {
    const Index rest = r.unflatten(flat);
    std::size_t k = 0;
    for (std::size_t s = 0; s < t.order(); ++s) {
      if (s != slot_a && s != slot_b) full[s] = rest[k++];
    }
    Scalar acc(0);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& w = pairing[p * n + q];
        if (is_zero(w)) continue;
        full[slot_a] = p;
        full[slot_b] = q;
        acc += w * t.at(full);
      }
    }
    r[flat] = acc;
  }
  return r;
}

Tensor contract_vector(const Tensor& t, std::size_t slot, const Vector& v) {
  if (slot >= t.order() || v.size() != t.dim()) throw InvalidArgument("bad vector contraction");
  Tensor r(t.dim(), t.order() - 1);
  Index full(t.order());
  for (std::size_t flat = 0; flat < r.size(); ++flat) {
    const Index rest = r.unflatten(flat);
    std::size_t k = 0;
    for (std::size_t s = 0; s < t.order(); ++s) {
      if (s != slot) full[s] = rest[k++];
    }
    Scalar acc(0);
    for (std::size_t p = 0; p < t.dim(); ++p) {
      if (is_zero(v[p])) continue;
      full[slot] = p;
      acc += v[p] * t.at(full);
    }
    r[flat] = acc;
  }
  return r;
}

}  // namespace killing
