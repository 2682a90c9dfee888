#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fockbench/random.hpp"
#include "fockbench/tensor.hpp"
#include "oracles.hpp"

using namespace fock;

TEST_CASE("flat index is big-endian and round-trips") {
  const std::vector<int> mi{1, 0, 2};
  CHECK(encode_index(mi, 3) == 1 * 9 + 0 * 3 + 2);
  for (std::size_t flat = 0; flat < 81; ++flat) {
    const auto back = decode_index(flat, 4, 3);
    CHECK(encode_index(back, 3) == flat);
  }
}

TEST_CASE("kron matches the entrywise oracle") {
  Rng rng(7);
  const Mat a = rng.gaussian(2, 3), b = rng.gaussian(3, 2);
  CHECK((kron(a, b) - oracle::kron(a, b)).norm() < 1e-14);
}

TEST_CASE("creator block is x ⊗ id and left creators shift levels") {
  Rng rng(3);
  const TruncatedFockSpace space(2, 3);
  const Vec x = rng.gaussian_vector(2);
  CHECK((creator_block(x, 2, 2) - oracle::kron(x, Mat::Identity(4, 4))).norm() < 1e-14);

  const auto ell = left_creator(x, space);
  auto v = GradedVector::vacuum(space);
  v = ell.apply(v);
  CHECK((v.levels[1] - x).norm() < 1e-14);

  // Adjointness on random graded vectors.
  GradedVector X = GradedVector::zero(space), Y = GradedVector::zero(space);
  for (int n = 0; n <= 3; ++n) {
    X.levels[static_cast<std::size_t>(n)] = rng.gaussian_vector(space.dim(n));
    Y.levels[static_cast<std::size_t>(n)] = rng.gaussian_vector(space.dim(n));
  }
  const auto ann = left_annihilator(x, space);
  CHECK(std::abs(ell.apply(X).inner(Y) - X.inner(ann.apply(Y))) < 1e-12);

  // Right creator appends the factor at the other end.
  const Vec y = rng.gaussian_vector(2);
  GradedVector one = GradedVector::zero(space);
  one.levels[1] = y;
  const auto r = right_creator(x, space).apply(one);
  CHECK((r.levels[2] - oracle::tensor({y, x})).norm() < 1e-13);
}

TEST_CASE("lifts place the identity on the expected side") {
  Rng rng(4);
  const Mat m = rng.gaussian(2, 2);
  CHECK((lift_left(m, 2, 1) - oracle::kron(Mat::Identity(2, 2), m)).norm() < 1e-14);
  CHECK((lift_right(m, 2, 2) - oracle::kron(m, Mat::Identity(4, 4))).norm() < 1e-14);
}

TEST_CASE("inversion counts agree across three routes") {
  std::vector<int> s(5);
  std::iota(s.begin(), s.end(), 0);
  do {
    const int brute = oracle::count_inversions(s);
    CHECK(inversions(s) == brute);
    CHECK(bubble_sort_swaps(s) == brute);
  } while (std::next_permutation(s.begin(), s.end()));
}

TEST_CASE("permutation operators compose contravariantly") {
  const TruncatedFockSpace space(2, 3);
  std::vector<int> s(3), t(3);
  std::iota(s.begin(), s.end(), 0);
  do {
    std::iota(t.begin(), t.end(), 0);
    do {
      const Mat lhs = permutation_operator(s, space) * permutation_operator(t, space);
      const Mat rhs = permutation_operator(oracle::compose(t, s), space);
      CHECK((lhs - rhs).norm() < 1e-14);
    } while (std::next_permutation(t.begin(), t.end()));
  } while (std::next_permutation(s.begin(), s.end()));
}

TEST_CASE("a transposition swaps tensor factors") {
  Rng rng(5);
  const TruncatedFockSpace space(3, 2);
  const Vec x = rng.gaussian_vector(3), y = rng.gaussian_vector(3);
  const std::vector<int> swap{1, 0};
  int inv = -1;
  const Mat p = permutation_operator(swap, space, &inv);
  CHECK(inv == 1);
  CHECK((p * oracle::tensor({x, y}) - oracle::tensor({y, x})).norm() < 1e-13);
  CHECK_THROWS_AS(permutation_action(std::vector<int>{0, 0}, 2), Error);
}

TEST_CASE("level cap guards dense levels and honours the environment") {
  CHECK_THROWS_AS(TruncatedFockSpace(10, 6), Error);
  CHECK_NOTHROW(TruncatedFockSpace(10, 5));
  ::setenv("FOCKBENCH_LEVEL_CAP", "50", 1);
  CHECK(level_cap() == 50);
  CHECK_THROWS_AS(TruncatedFockSpace(2, 6), Error);
  ::unsetenv("FOCKBENCH_LEVEL_CAP");
  CHECK(level_cap() == kDefaultLevelCap);
  CHECK_THROWS_AS(TruncatedFockSpace(0, 2), Error);
  const TruncatedFockSpace s(2, 3);
  CHECK(s.total_dim() == 1 + 2 + 4 + 8);
}
