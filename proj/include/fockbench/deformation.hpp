#pragma once

// Deformation families L = (L_n): positive Fock maps inducing the semiinner
// product (X, Y) = <X, L Y> on the full Fock space.

#include <vector>

#include "fockbench/tensor.hpp"

namespace fock {

struct DeformationFamily {
  TruncatedFockSpace space;
  std::vector<Mat> L;  // L[n] is d^n × d^n, L[0] == [1]
};

/// Checks shapes and L_0 = [1]; does not check positivity.
DeformationFamily make_family(const TruncatedFockSpace& space, std::vector<Mat> levels);

/// Identity at every level: the full Fock space.
DeformationFamily identity_family(const TruncatedFockSpace& space);

enum class QFockPath { Auto, Naive, Recursive };

/// Maximal level for enumerating S_n directly.
inline constexpr int kNaiveQFockMaxLevel = 8;
/// Auto uses enumeration up to this level and the recursion above.
inline constexpr int kAutoNaiveLevel = 5;

/// L_n = Σ_{σ∈S_n} q^{inv σ} P_σ, q ∈ [-1, 1].
DeformationFamily q_fock(const TruncatedFockSpace& space, double q,
                         QFockPath path = QFockPath::Auto);

/// L_{n+1} = (id_H ⊗ L_n) T_{n+1} with T_{n+1} = Σ_k q^k C_k, where C_k moves
/// the factor at position k (from the left) to the front.
DeformationFamily q_fock_recursive(const TruncatedFockSpace& space, double q);

/// Diagonal indicator of strictly decreasing multi-indices i_1 > i_2 > ...
/// (read left to right), a discrete stand-in for the monotone Fock space.
DeformationFamily discrete_monotone(const TruncatedFockSpace& space);

/// Interacting Fock 2-space: L_1 = id, L_2 = Λ_2* Λ_2 with Λ_2 = Φ read as
/// the row (Φ(e_i ⊗ e_j))_{ij}; N = 2.
DeformationFamily two_space_family(const Mat& phi);

struct ValidationOptions {
  double psd_tol = 1e-10;          // relative to the largest eigenvalue
  double rank_tol = kRankTol;      // kernel detection, relative to σ_max
  double kernel_tol = 1e-8;        // ‖L_{n+1}(e_i⊗v)‖ relative to ‖L_{n+1}‖
  double hermitian_error = 1e-8;   // larger asymmetry is an error
};

struct LevelValidation {
  int level = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double hermitian_defect = 0.0;
  bool symmetrized = false;
  bool psd = true;
  Index kernel_dim = 0;
  // max_i ‖L_{n+1}(e_i ⊗ v)‖ / ‖L_{n+1}‖ over kernel basis vectors v of L_n;
  // zero for the top level.
  double kernel_violation = 0.0;
  bool kernel_ok = true;
};

struct ValidationReport {
  std::vector<LevelValidation> levels;
  bool vacuum_ok = true;
  bool psd_ok = true;
  bool kernel_ok = true;
  bool passed() const { return vacuum_ok && psd_ok && kernel_ok; }
};

/// Throws when some level is non-Hermitian beyond `hermitian_error`.
ValidationReport validate(const DeformationFamily& family, const ValidationOptions& opts = {});

struct KernelFactorization {
  std::vector<Mat> K;               // K[n] for 1 <= n <= N; K[0] = [1]
  std::vector<double> residuals;    // ‖L_n - K_n(id⊗L_{n-1})‖_F / ‖L_n‖_F
  double max_residual = 0.0;
};

/// Minimal-norm K_{n+1} = L_{n+1} · pinv(id_H ⊗ L_n). Throws when the
/// reconstruction residual exceeds `tol` (the kernel condition fails).
KernelFactorization factor_K(const DeformationFamily& family, double tol = 1e-9,
                             double rank_tol = kRankTol);

/// L_n = K_n (id ⊗ K_{n-1}) ... (id^{⊗(n-1)} ⊗ K_1).
std::vector<Mat> reconstruct_from_K(const std::vector<Mat>& K, int d);

}  // namespace fock
