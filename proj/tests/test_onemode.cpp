#include <doctest.h>

#include "fockbench/onemode.hpp"
#include "fockbench/random.hpp"
#include "oracles.hpp"

using namespace fock;

namespace {

std::vector<double> ks_from_ell(const std::vector<double>& ell) {
  std::vector<double> k;
  for (std::size_t n = 1; n < ell.size(); ++n) k.push_back(ell[n] / ell[n - 1]);
  return k;
}

const std::vector<double> kGauss{1, 0, 1, 0, 3, 0, 15, 0, 105};
const std::vector<double> kCatalan{1, 0, 1, 0, 2, 0, 5, 0, 14};

}  // namespace

TEST_CASE("Gaussian and semicircle moments") {
  const auto g = jacobi_from_moments(kGauss);
  REQUIRE(g.N() == 4);
  const auto ref = ks_from_ell(oracle::gram_schmidt_norms(kGauss));
  for (int n = 0; n < 4; ++n) {
    CHECK(g.k[static_cast<std::size_t>(n)] == doctest::Approx(n + 1.0).epsilon(1e-10));
    CHECK(g.k[static_cast<std::size_t>(n)] == doctest::Approx(ref[static_cast<std::size_t>(n)]).epsilon(1e-10));
  }
  const auto c = jacobi_from_moments(kCatalan);
  for (double k : c.k) CHECK(k == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-point measure truncates after the first level") {
  const auto j = jacobi_from_moments({1, 0, 1, 0, 1, 0, 1});
  CHECK(j.k[0] == doctest::Approx(1.0));
  CHECK(j.k[1] == 0.0);
  CHECK(j.k[2] == 0.0);
  const auto s = onemode_space(j, 3);
  CHECK(s.ranks == std::vector<Index>{1, 1, 0, 0});
  const auto m = vacuum_moments(s, 7);
  for (int p = 0; p <= 7; ++p) CHECK(m[static_cast<std::size_t>(p)] == doctest::Approx(p % 2 == 0 ? 1.0 : 0.0));
}

TEST_CASE("LDL pivots agree with Hankel determinants and Gram–Schmidt on random atomic measures") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> t, w;
    double total = 0.0;
    for (int i = 0; i < 6; ++i) {
      t.push_back(rng.uniform(0.2, 2.0));
      w.push_back(rng.uniform(0.1, 1.0));
      total += w.back();
    }
    for (double& x : w) x /= total;
    const auto moments = oracle::symmetric_atoms_moments(t, w, 4);
    const auto j = jacobi_from_moments(moments);
    const auto gs = oracle::gram_schmidt_norms(moments);
    const auto hd = oracle::hankel_determinant_norms(moments);
    for (int n = 0; n <= 4; ++n) {
      if (gs[static_cast<std::size_t>(n)] < 1e-6) break;  // only well-conditioned levels
      CHECK(j.ell[static_cast<std::size_t>(n)] == doctest::Approx(gs[static_cast<std::size_t>(n)]).epsilon(1e-8));
      CHECK(j.ell[static_cast<std::size_t>(n)] == doctest::Approx(hd[static_cast<std::size_t>(n)]).epsilon(1e-7));
    }
    CHECK(orthogonality_residual(j, moments) < 1e-9);
  }
}

TEST_CASE("three-term recursion gives Hermite polynomials") {
  const auto p = polynomials(jacobi_from_k({1, 2, 3}));
  CHECK(p[2] == std::vector<double>{-1, 0, 1});
  CHECK(p[3] == std::vector<double>{0, -3, 0, 1});
  const auto mono = polynomials(jacobi_from_k({0, 0}));
  CHECK(mono[2] == std::vector<double>{0, 0, 1});
}

TEST_CASE("vacuum moments close the loop") {
  for (const auto* moments : {&kGauss, &kCatalan}) {
    const auto j = jacobi_from_moments(*moments);
    const auto s = onemode_space(j, j.N());
    const auto vm = vacuum_moments(s, 8);
    for (std::size_t m = 0; m < moments->size(); ++m) CHECK(vm[m] == doctest::Approx((*moments)[m]).epsilon(1e-9));
  }
  const auto s = onemode_space(jacobi_from_k({1, 1}), 2);
  CHECK(vacuum_moments(s, 0) == std::vector<double>{1.0});
  CHECK_THROWS_AS(vacuum_moments(s, 6), Error);
}

TEST_CASE("k_n = n gives the number operator") {
  const auto s = onemode_space(jacobi_from_k({1, 2, 3, 4}), 4);
  const Mat a_star = s.creator_operator(Vec::Ones(1));
  const Mat number = a_star * a_star.adjoint();
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(number(n, n).real() - n) < 1e-12);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(jacobi_from_moments({1, 0.5, 1}), Error);           // odd moment
  CHECK_THROWS_AS(jacobi_from_moments({1, 0, 1, 0, 0.5}), Error);     // m4 < m2²: not positive
  CHECK_THROWS_AS(jacobi_from_moments({2, 0, 1}), Error);             // m0 != 1
  CHECK_THROWS_AS(jacobi_from_k({1, 0, 1}), Error);                   // zero must propagate
  CHECK_THROWS_AS(jacobi_from_k({1, -1}), Error);
}
