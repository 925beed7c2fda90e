// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "killing/errors.hpp"
#include "killing/models.hpp"
#include "killing/random.hpp"
#include "killing/tensor.hpp"

using namespace killing;

TEST_CASE("tensor storage is row-major with the first slot slowest") {
  Tensor t(3, 2);
  t.at({0, 1}) = 5;
  CHECK(t[1] == 5);
  CHECK(t.offset(std::vector<std::size_t>{2, 1}) == 7);
  CHECK(t.unflatten(7) == Index{2, 1});
  CHECK(t.size() == 9);
  CHECK(Tensor::scalar(Scalar(4)).size() == 1);
  CHECK(Tensor(2, 5).size() == 32);
  CHECK(t.support() == 1);
}

TEST_CASE("permute_slots examples") {
  Rng rng(3);
  const Tensor t = rng.tensor(3, 3, 5);
  CHECK(permute_slots(t, Permutation(3)) == t);

  const Tensor g = ambient_metric({2, 1});
  const Tensor gg = outer(g, g);
  CHECK(permute_slots(gg, Permutation::from_cycles("(12)", 4)) == gg);

  Tensor e(2, 2);
  e.at({0, 1}) = Scalar(7, 3);
  const Tensor p = permute_slots(e, Permutation::from_cycles("(12)", 2));
  CHECK(p.support() == 1);
  CHECK(p.at({1, 0}) == Scalar(7, 3));
}

TEST_CASE("permute_slots is a left action for d <= 4") {
  for (std::size_t d = 1; d <= 4; ++d) {
    Rng rng(10 + d);
    const Tensor t = rng.tensor(3, d, 4);
    const auto all = all_permutations(d);
    for (const auto& s : all)
      for (const auto& p : all) CHECK(permute_slots(permute_slots(t, s), p) == permute_slots(t, p * s));
  }
}

TEST_CASE("permute_slots realises the component convention") {
  Rng rng(4);
  const Tensor t = rng.tensor(3, 3, 5);
  const auto pi = Permutation::from_cycles("(123)", 3);
  const Tensor p = permute_slots(t, pi);
  for_each_index(3, 3, [&](const Index& i) {
    CHECK(p.at(i) == t.at({i[static_cast<std::size_t>(pi(1) - 1)], i[static_cast<std::size_t>(pi(2) - 1)],
                           i[static_cast<std::size_t>(pi(3) - 1)]}));
  });
}

TEST_CASE("contract examples") {
  const Tensor g3 = ambient_metric({3, 0});
  CHECK(contract(g3, 0, 1, ambient_metric_inverse({3, 0}))[0] == 3);
  const Tensor g31 = ambient_metric({3, 1});
  CHECK(contract(g31, 0, 1, ambient_metric_inverse({3, 1}))[0] == 4);
  const Vector x = {Scalar(3, 5), Scalar(4, 5), 0};
  const Tensor xx = outer(Tensor::vector(x), Tensor::vector(x));
  CHECK(contract(xx, 0, 1, g3)[0] == 1);
  CHECK_THROWS_AS(contract(xx, 0, 0, g3), InvalidArgument);
  CHECK_THROWS_AS(contract(xx, 0, 2, g3), InvalidArgument);
  CHECK_THROWS_AS(contract(xx, 0, 1, ambient_metric({2, 0})), InvalidArgument);
}

TEST_CASE("contract is bilinear") {
  Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const Tensor a = rng.tensor(3, 3, 4), b = rng.tensor(3, 3, 4);
    const Tensor p = rng.tensor(3, 2, 4), q = rng.tensor(3, 2, 4);
    const Scalar c = rng.rational(5);
    CHECK(contract(a * c + b, 0, 2, p) == contract(a, 0, 2, p) * c + contract(b, 0, 2, p));
    CHECK(contract(a, 1, 2, p * c + q) == contract(a, 1, 2, p) * c + contract(a, 1, 2, q));
  }
}

TEST_CASE("symmetrisation examples") {
  Rng rng(9);
  Tensor h = rng.tensor(3, 2, 5);
  h = h + permute_slots(h, Permutation::from_cycles("(12)", 2));
  CHECK(antisymmetrise_slots(h, {0, 1}).is_zero());
  const Tensor t = rng.tensor(3, 3, 5);
  CHECK(symmetrise_slots(t, {1}) == t);
  const Tensor xyz =
      outer(outer(Tensor::vector(rng.vector(3, 4)), Tensor::vector(rng.vector(3, 4))), Tensor::vector(rng.vector(3, 4)));
  const Tensor alt = antisymmetrise_slots(xyz, {0, 1, 2});
  for_each_index(3, 3, [&](const Index& i) {
    if (i[0] == i[1] || i[1] == i[2] || i[0] == i[2]) CHECK(alt.at(i) == 0);
  });
  CHECK_THROWS_AS(symmetrise_slots(t, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(antisymmetrise_slots(t, {0, 3}), InvalidArgument);
}

TEST_CASE("symmetrisation properties") {
  Rng rng(12);
  for (int k = 0; k < 5; ++k) {
    const Tensor t = rng.tensor(3, 4, 5);
    CHECK(antisymmetrise_slots(symmetrise_slots(t, {0, 2}), {0, 2}).is_zero());
    CHECK(symmetrise_slots(antisymmetrise_slots(t, {1, 2, 3}), {1, 3}).is_zero());
    const Tensor once = antisymmetrise_slots(t, {0, 1, 3});
    CHECK(antisymmetrise_slots(once, {0, 1, 3}) == once * Scalar(6));
    const Tensor s = symmetrise_slots(t, {1, 2});
    CHECK(symmetrise_slots(s, {1, 2}) == s * Scalar(2));
  }
}

TEST_CASE("arithmetic rejects shape mismatch") {
  Tensor a(2, 2), b(3, 2), c(2, 3);
  CHECK_THROWS_AS(a += b, InvalidArgument);
  CHECK_THROWS_AS(a -= c, InvalidArgument);
  CHECK(a == Tensor(2, 2));
  CHECK_FALSE(a == c);
}
