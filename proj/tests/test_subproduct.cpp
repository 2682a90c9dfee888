#include <doctest.h>

#include "fockbench/random.hpp"
#include "fockbench/subproduct.hpp"
#include "oracles.hpp"

using namespace fock;

namespace {

// ‖(id - q) p‖ computed from the definition with plain matrices.
double violation(const Mat& p, const Mat& q) {
  return (p - q * p).operatorNorm();
}

}  // namespace

TEST_CASE("order violation of projections") {
  const Mat p = projector(unit_vector(3, 0), 3);
  Mat b(3, 2);
  b << 1, 0, 0, 1, 0, 0;
  const Mat q = projector(b, 3);
  CHECK(order_violation(p, q) < 1e-15);
  CHECK(order_violation(q, p) == doctest::Approx(1.0));
}

TEST_CASE("pairwise inequalities hold for random adjacent families") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = random_adjacent_family(2, 4, {1, -1, -1, -1, -1}, seed);
    const auto c = certify(f);
    CHECK(c.subproduct_system());
    CHECK_FALSE(c.inconsistent);
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; m + n <= 4; ++n) {
        const Mat mn = oracle::kron(f.pi[static_cast<std::size_t>(m)], f.pi[static_cast<std::size_t>(n)]);
        CHECK(violation(f.pi[static_cast<std::size_t>(m + n)], mn) < 1e-10);
      }
    CHECK(c.max_pairwise < 1e-10);
    CHECK(c.products_checked);
    CHECK(c.coisometry_residual < 1e-10);
    CHECK(c.associativity_residual < 1e-10);
  }
}

TEST_CASE("requested ranks are respected") {
  const auto f = random_adjacent_family(3, 3, {1, 3, 5, 3}, 4);
  CHECK(f.ranks == std::vector<Index>{1, 3, 5, 3});
  CHECK_THROWS_AS(random_adjacent_family(2, 2, {1, 2, 7}, 1), Error);
  CHECK_THROWS_AS(random_adjacent_family(2, 2, {2, 2, 2}, 1), Error);
}

TEST_CASE("symmetrizer and full families are subproduct systems") {
  const TruncatedFockSpace space(3, 3);
  const auto sym = symmetrizer_family(space);
  CHECK(sym.ranks == std::vector<Index>{1, 3, 6, 10});
  CHECK(certify(sym).subproduct_system());
  CHECK(certify(full_projection_family(space)).subproduct_system());
  const auto maps = product_maps(sym);
  CHECK(maps.coisometry_residual < 1e-10);
  CHECK(maps.associativity_residual < 1e-10);
  // v_{1,1} restricted to symmetric tensors multiplies commutatively: v(a⊗b) = v(b⊗a).
  const Mat& v = maps.maps[1][1];
  const Mat swap = oracle::kron(maps.bases[1], maps.bases[1]).adjoint() *
                   permutation_operator(std::vector<int>{1, 0}, space) *
                   oracle::kron(maps.bases[1], maps.bases[1]);
  CHECK((v * swap - v).norm() < 1e-10);
}

TEST_CASE("product-tensor family passes one chain and fails the other") {
  const auto f = product_tensor_family(4, 4);
  CHECK_FALSE(f.pi1_is_identity);
  const auto c = certify(f);
  CHECK(c.pirec_ok);
  CHECK_FALSE(c.spsker_ok);
  CHECK(c.max_spsker >= 0.9);
  CHECK_FALSE(c.products_checked);
  CHECK_THROWS_AS(product_maps(f), Error);
  // Still a π-space, and the right-kernel condition fails on it.
  const auto ps = pi_space(f);
  CHECK(ps.max_deviation() < 1e-10);
  const auto two = two_sided_test(ps.space);
  CHECK_FALSE(two.exists);
  CHECK_THROWS_AS(product_tensor_family(2, 3), Error);
}

TEST_CASE("π-interacting spaces: π = L = λ = κ") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = random_adjacent_family(2, 4, {1, 2, -1, -1, -1}, seed);
    const auto ps = pi_space(f);
    CHECK(ps.max_deviation() < 1e-10);
    CHECK(verify(ps.space).max_residual() < 1e-9);
    const auto two = two_sided_test(ps.space);
    CHECK(two.exists);
    CHECK(two.kappa_contraction);
    CHECK(two.factorization_residual < 1e-9);
  }
}

TEST_CASE("pirec failure blocks the π-space") {
  const TruncatedFockSpace space(2, 2);
  // π_2 = |e_1 e_1><e_1 e_1| with π_1 = |e_0><e_0| violates id⊗π_1 ≥ π_2.
  const Mat p1 = projector(unit_vector(2, 0), 2);
  const Mat p2 = projector(unit_vector(4, 3), 4);
  const auto f = make_projection_family(space, {identity(1), p1, p2});
  const auto c = certify(f);
  CHECK_FALSE(c.pirec_ok);
  CHECK_THROWS_AS(pi_space(f), Error);
  CHECK_THROWS_AS(make_projection_family(space, {identity(1), 2.0 * p1, p2}), Error);
}

TEST_CASE("random positive families generally fail the two-sided test") {
  int failures = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = build(random_poi_family(2, 3, {1, 2, 3, 4}, seed));
    failures += !two_sided_test(s).exists;
  }
  CHECK(failures == 5);
}
