#pragma once

// One-mode interacting Fock spaces (d = 1): symmetric moment sequences,
// Jacobi parameters k_n, squared norms ℓ_n = k_n...k_1 and the monic
// orthogonal polynomials P_{n+1} = t P_n - k_n P_{n-1}.

#include <vector>

#include "fockbench/interacting.hpp"

namespace fock {

struct JacobiData {
  std::vector<double> k;    // k[n-1] = k_n, n = 1..N
  std::vector<double> ell;  // ell[n] = ℓ_n, n = 0..N, ℓ_0 = 1
  int N() const { return static_cast<int>(k.size()); }
};

struct MomentOptions {
  double odd_tol = 1e-12;       // |m_odd| allowed, relative to max(1, |m|max)
  double degenerate = 1e-12;    // ℓ_n <= degenerate * max(1, ℓ_{n-1}) truncates
  double negative_tol = 1e-9;   // ℓ_n below -negative_tol * max(1, ℓ_{n-1}) is an error
};

/// Moments m_0..m_{2N} -> k_1..k_N via the LDL pivots of the Hankel matrix
/// (ℓ_n = Δ_{n+1}/Δ_n). Throws on m_0 != 1, nonzero odd moments or a
/// Hankel matrix that is not positive semidefinite.
JacobiData jacobi_from_moments(const std::vector<double>& moments, const MomentOptions& opts = {});

/// k -> ℓ; checks k_n >= 0 and that k_n = 0 forces every later k to vanish.
JacobiData jacobi_from_k(const std::vector<double>& k);

/// Coefficients of P_0..P_N, ascending powers (P_n has n + 1 entries).
std::vector<std::vector<double>> polynomials(const JacobiData& j);

/// max_{m,n} |∫P_m P_n dμ - δ_{mn} ℓ_n| / max(1, ℓ_n), using the moments
/// (needs moments up to order 2N).
double orthogonality_residual(const JacobiData& j, const std::vector<double>& moments);

/// L_n = [ℓ_n] on C^{⊗n} = C.
DeformationFamily onemode_family(const JacobiData& j, int N);

InteractingSpace onemode_space(const JacobiData& j, int N, const BuildOptions& opts = {});

/// ⟨Ω, (a + a*)^m Ω⟩ for m = 0..M; requires M <= 2N + 1, where truncation
/// at level N is still exact.
std::vector<double> vacuum_moments(const InteractingSpace& space, int M);

}  // namespace fock
