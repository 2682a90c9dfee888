#pragma once

// Per-level creator norms and operator-inequality constants, growth
// diagnostics across truncations, and four worked counterexample families.

#include <cstdint>
#include <string>
#include <vector>

#include "fockbench/interacting.hpp"

namespace fock {

struct LevelConstants {
  int level = 0;
  double creator_norm = 0.0;     // ‖a*(x)‖ on H_n, quotient coordinates
  double kappa_form_norm = 0.0;  // ‖λ_{n+1}(x⊗id)λ_n^+‖
  double pencil_constant = 0.0;  // M_x(n): least M with (x⊗id)*L_{n+1}(x⊗id) <= M² L_n
  double kernel_compat = 0.0;    // ‖B v‖ / ‖B‖ over kernel vectors v of L_n
};

/// Levels 0..N-1. Throws when B = (x⊗id)*L_{n+1}(x⊗id) does not vanish on
/// ker L_n (tolerance `kernel_tol`, relative): then no constant exists.
std::vector<LevelConstants> level_constants(const InteractingSpace& space, const Vec& x,
                                            double kernel_tol = 1e-9);

/// sup_{‖x‖=1} ‖a*(x)‖ on level n. Alternating maximisation over (x, y) from
/// random starts; `exact` is set when d <= kExactCreatorMapMaxD, otherwise the
/// value is a lower bound from the same search with fewer starts.
struct CreatorMapConstant {
  int level = 0;
  double value = 0.0;
  bool exact = false;
};

inline constexpr int kExactCreatorMapMaxD = 3;
inline constexpr int kCreatorMapStarts = 64;

std::vector<CreatorMapConstant> creator_map_constants(const InteractingSpace& space,
                                                      std::uint64_t seed = 1);

/// max_n ‖κ_n‖ (spectral).
double kappa_norm(const InteractingSpace& space);

/// Log-log least-squares fit y ~ C x^slope. The label is "bounded" when the
/// slope is at most `flat_slope` and "diverging" otherwise; no verdict about
/// the infinite-dimensional object is implied.
struct GrowthFit {
  double slope = 0.0;
  double log_intercept = 0.0;
  std::string label;
};

GrowthFit diagnose_growth(const std::vector<double>& xs, const std::vector<double>& ys,
                          double flat_slope = 0.05);

struct BoundsReport {
  std::vector<LevelConstants> levels;
  std::vector<CreatorMapConstant> creator_map;
  double x_norm = 0.0;
  double kappa_norm = 0.0;
  GrowthFit creator_growth;  // pencil constants against level index + 1
};

BoundsReport bounds_report(const InteractingSpace& space, const Vec& x, std::uint64_t seed = 1);

// --- bounded L, unbounded creators --------------------------------------
//
// L²[0,1] on m uniform cells with the normalised cell basis e_j = √m·1_{cell j}.
// L_1 = multiplication by the cell midpoints, L_2 = id, N = 2.

DeformationFamily grid_family(int m);

/// ‖a*(x)y‖/‖y‖ for y the indicator of the first cell, using the diagonal
/// formulas; x is given in the cell basis.
double grid_ratio(int m, const Vec& x);

/// x = the constant function 1 in the cell basis.
Vec grid_constant_one(int m);

struct GridRow {
  int m = 0;
  double ratio = 0.0;
  double L_max = 0.0;  // max eigenvalue over all levels of the family
};

struct GridDemo {
  std::vector<GridRow> rows;
  double growth_factor = 0.0;  // last ratio / first ratio
  GrowthFit growth;
};

GridDemo demo_bounded_L_unbounded_creators(const std::vector<int>& grids);

// --- bounded creator map, unbounded L_2 ----------------------------------
//
// H = ⊕_{n<=K} C^n, L_1 = id, L_2 = ⊕_n δ_{mn} n p_n with p_n the projection
// onto e^n = Σ_i e_i⊗e_i/√n. Computed blockwise: (x⊗id)*L_2(x⊗id) is the
// block diagonal operator ⊕_n conj(x^n) conj(x^n)*.

int block_dimension(int K);

/// λ_max((x⊗id)*L_2(x⊗id)) / ‖x‖² from blockwise eigen-solves.
double block_constant(int K, const Vec& x);

/// ‖L_2‖ = max_n ‖n p_n‖.
double block_L2_norm(int K);

/// Dense family (d = K(K+1)/2, N = 2), for cross-checks at small K.
DeformationFamily block_family(int K);

struct BlockDemo {
  int K = 0;
  double L2_norm = 0.0;
  double max_constant = 0.0;
  int probes = 0;
};

BlockDemo demo_bounded_creators_unbounded_L(int K, std::uint64_t seed = 1, int random_probes = 32);

// --- isometric creator map, unbounded squeezing --------------------------
//
// I = ΩC ⊕ H ⊕ Ω_2C with a*(x)y = Ω_2 Σ_i x_i y_i (conjugation in the standard
// basis). κ_2 = Ω_2 Φ, Φ(x⊗y) = Σ_i x_i y_i.

/// ‖κ_2 v_N‖/‖v_N‖ with v_N = Σ_{n<=N} e_n⊗e_n/n, i.e. H_N / √(Σ 1/n²).
double squeezing_ratio(int N);

/// κ for the space above with d = dim H and a seeded random unit Ω_2.
Squeezing two_space_squeezing(int d, std::uint64_t seed);

/// ‖κ_2 v‖/‖v‖ evaluated with matrices.
double squeezing_ratio_dense(const Squeezing& kappa, int N);

struct SqueezingDemo {
  std::vector<double> ratios;  // ratios[N-1] for N = 1..max
  bool strictly_increasing = true;
  GrowthFit growth;
};

SqueezingDemo demo_unbounded_squeezing(int N);

// --- rescaled functional ---------------------------------------------------
//
// F(i,j) = |Φ(e_i⊗e_j)| on basis indices 1..B; f(n) = max{1, F(i,j) : i,j <= n};
// c_n = 2^n f(n); the basis is rescaled to ⟨e_i, e_j⟩ = δ_ij c_i².

struct FunctionalRescaling {
  std::vector<double> f;      // f[n-1] = f(n)
  std::vector<double> c;      // c[n-1] = c_n
  bool entry_bound_ok = true; // F(i,j) <= f(i) f(j) everywhere
  double exact_norm = 0.0;    // ‖Φ‖ in the rescaled norm
  double maximizer_ratio = 0.0;
  double max_random_ratio = 0.0;
  int samples = 0;
  double bound = 1.0 / 3.0;
  bool certified() const {
    return entry_bound_ok && exact_norm <= bound && maximizer_ratio <= bound && max_random_ratio <= bound;
  }
};

/// Random samples are v_ij = g_ij/(c_i c_j) with complex Gaussian g, which
/// probes every direction with comparable weight.
FunctionalRescaling rescale_functional(const Eigen::MatrixXd& F, std::uint64_t seed = 1, int samples = 1000);

/// |Φ(v)| / ‖v‖ in the rescaled norm.
double rescaled_ratio(const Eigen::MatrixXd& F, const std::vector<double>& c, const Mat& v);

/// Entries uniform in [0, max_entry].
Eigen::MatrixXd random_functional(int B, double max_entry, std::uint64_t seed);

}  // namespace fock
