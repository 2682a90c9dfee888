#pragma once

// Projection families π = (π_n), the subproduct-system conditions
// id⊗π_n ≥ π_{n+1} ≤ π_n⊗id, product maps on range coordinates, the
// π-interacting Fock space and the two-sided (productive) factorization test.

#include <cstdint>
#include <vector>

#include "fockbench/interacting.hpp"

namespace fock {

struct ProjectionFamily {
  TruncatedFockSpace space{1, 0};
  std::vector<Mat> pi;       // pi[n] is d^n × d^n, pi[0] = [1]
  std::vector<Index> ranks;
  bool pi1_is_identity = false;
};

/// Checks π_0 = [1] and that each π_n is a Hermitian idempotent within `tol`.
/// π_1 = id is recorded in `pi1_is_identity` but not required.
ProjectionFamily make_projection_family(const TruncatedFockSpace& space, std::vector<Mat> pi,
                                        double tol = 1e-10);

/// π_n = L_n/n! of the q = 1 family: the symmetric subspaces.
ProjectionFamily symmetrizer_family(const TruncatedFockSpace& space);

ProjectionFamily full_projection_family(const TruncatedFockSpace& space);

/// π_n = p_n⊗...⊗p_1 with p_k = e_{k-1}e_{k-1}* (requires d >= N).
ProjectionFamily product_tensor_family(int d, int N);

/// ‖(id - q)p‖: zero exactly when p ≤ q for orthogonal projections.
double order_violation(const Mat& p, const Mat& q);

struct PairwiseCheck {
  int m = 0;
  int n = 0;
  double violation = 0.0;  // ‖(id - π_m⊗π_n)π_{m+n}‖
};

struct SubproductCertificate {
  std::vector<double> pirec;    // [n] = ‖(id - id⊗π_n)π_{n+1}‖, n = 0..N-1
  std::vector<double> spsker;   // [n] = ‖(id - π_n⊗id)π_{n+1}‖
  std::vector<PairwiseCheck> pairwise;  // m, n >= 1, m + n <= N
  double max_pirec = 0.0;
  double max_spsker = 0.0;
  double max_pairwise = 0.0;
  bool pirec_ok = false;
  bool spsker_ok = false;
  bool pairwise_ok = false;
  // Both adjacent chains pass but some pairwise inequality fails: this
  // is impossible in exact arithmetic and signals a numerical or software defect.
  bool inconsistent = false;
  // Only filled when both adjacent chains pass.
  bool products_checked = false;
  double coisometry_residual = 0.0;
  double associativity_residual = 0.0;
  double tol = 1e-10;
  bool subproduct_system() const { return pirec_ok && spsker_ok; }
};

SubproductCertificate certify(const ProjectionFamily& family, double tol = 1e-10);

/// v_{m,n} = B_{m+n}*(B_m⊗B_n) with B_k an orthonormal basis of range π_k;
/// indexed as maps[m][n] for m + n <= N.
struct ProductMaps {
  std::vector<Mat> bases;
  std::vector<std::vector<Mat>> maps;
  double coisometry_residual = 0.0;      // max ‖v v* - id‖
  double associativity_residual = 0.0;   // max over m + n + k <= N
};

/// Throws when the adjacent chains fail.
ProductMaps product_maps(const ProjectionFamily& family, double tol = 1e-10);

struct PiSpace {
  InteractingSpace space;
  Squeezing kappa;
  double lambda_deviation = 0.0;  // max ‖λ_n - π_n‖
  double kappa_deviation = 0.0;   // max ‖κ_n - π_n‖
  double L_deviation = 0.0;       // max ‖L_n - π_n‖
  double max_deviation() const;
};

/// Interacting space with L = π. Throws when the pirec chain fails.
PiSpace pi_space(const ProjectionFamily& family, double tol = 1e-10);

/// Random family satisfying both adjacent chains: π_{n+1} projects onto a
/// random subspace of range(id⊗π_n) ∩ range(π_n⊗id). `ranks[n]` is the
/// requested rank of π_n (ranks[0] must be 1); -1 requests a uniformly random
/// rank in [1, dim of the intersection] (0 if the intersection is trivial).
ProjectionFamily random_adjacent_family(int d, int N, const std::vector<int>& ranks, std::uint64_t seed);

struct TwoSidedResult {
  std::vector<double> right_kernel_residual;  // max_i ‖λ_{n+1}(v⊗e_i)‖/‖λ_{n+1}‖
  bool exists = false;
  std::vector<Mat> kappa_prime;                // κ′_{n+1} = λ_{n+1}(λ_n^+⊗id)
  double factorization_residual = 0.0;         // ‖λ_{n+1} - κ′(λ_n⊗id)‖ relative
  std::vector<double> kappa_prime_norms;
  std::vector<double> kappa_norms;
  bool kappa_contraction = false;
  bool kappa_prime_contraction = false;
};

TwoSidedResult two_sided_test(const InteractingSpace& space, double tol = 1e-9);

}  // namespace fock
