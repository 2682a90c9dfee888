#pragma once

// Interacting Fock spaces realised in finite truncation.
//
// A space is stored through its quotient maps Λ_n : H^{⊗n} → H_n, written in
// an orthonormal basis of H_n (so the level space H_n is C^{r_n}), and an
// embedding ξ_n : H_n → H^{⊗n}. The embedded quotient map is λ_n = ξ_n Λ_n.
// Creators act on quotient coordinates through a_n(i) : H_n → H_{n+1}, the
// unique maps with a_n(i) Λ_n = Λ_{n+1}(e_i ⊗ id).

#include <cstdint>
#include <vector>

#include "fockbench/deformation.hpp"

namespace fock {

struct BuildOptions {
  double rank_tol = kRankTol;     // eigenvalues / singular values, relative
  double psd_tol = 1e-10;         // negative eigenvalues allowed, relative
  double residual_tol = 1e-9;     // creator well-definedness, relative
};

struct InteractingSpace {
  TruncatedFockSpace space{1, 0};
  std::vector<Mat> L;        // Gram data λ_n* λ_n
  std::vector<Index> ranks;  // r_n = dim H_n
  std::vector<Mat> Lambda;   // r_n × d^n, surjective
  std::vector<Mat> xi;       // d^n × r_n, isometric
  std::vector<Mat> lambda;   // d^n × d^n
  // creators[n][i] = a_n(e_i), shape r_{n+1} × r_n, for 0 <= n < N.
  std::vector<std::vector<Mat>> creators;
  double well_definedness_residual = 0.0;

  int d() const { return space.d(); }
  int N() const { return space.N(); }

  /// a*(x) restricted to H_n.
  Mat creator(int n, const Vec& x) const;

  /// Offsets of each level inside the stacked coordinates ⊕_n C^{r_n}.
  std::vector<Index> offsets() const;
  Index total_dim() const;

  /// a*(x) as one matrix on ⊕_n H_n. The top level is mapped to zero.
  Mat creator_operator(const Vec& x) const;
};

/// Quotient construction from a positive family. λ_n = √L_n (eigenvalues
/// below the rank threshold dropped, so that λ_n = ξ_n Λ_n exactly) and ξ_n
/// the kept eigenvectors. Throws if L_n has negative eigenvalues beyond
/// tolerance or if the creators are not well defined.
InteractingSpace build(const DeformationFamily& family, const BuildOptions& opts = {});

/// Construction from an embedded quotient map λ (not necessarily positive):
/// ξ_n is an orthonormal basis of range λ_n and Λ_n = ξ_n* λ_n.
InteractingSpace from_embedding(const TruncatedFockSpace& space, std::vector<Mat> lambda,
                                const BuildOptions& opts = {});

/// Rebuilds derived data (creators, residual) from stored parts.
InteractingSpace from_parts(const TruncatedFockSpace& space, std::vector<Mat> Lambda,
                            std::vector<Mat> xi, const BuildOptions& opts = {});

struct Squeezing {
  std::vector<Mat> kappa;  // kappa[n] is d^n × d^n; kappa[0] = [1]
};

/// κ_{n+1} = λ_{n+1}(id_H ⊗ λ_n^+).
Squeezing squeezing_of(const InteractingSpace& space);

/// λ_0 = [1], λ_{n+1} = κ_{n+1}(id_H ⊗ λ_n).
std::vector<Mat> lambda_from_squeezing(const Squeezing& kappa, int d);

struct SqueezingCheck {
  // ‖κ_{n+1}(id ⊗ (1 - P_n))‖ / ‖κ_{n+1}‖ with P_n the projection onto the
  // range flag (range_0 = C, range_{n+1} = κ_{n+1}(H ⊗ range_n)).
  double vanishing_residual = 0.0;
  // ‖(1 - P_n) κ_n‖ / ‖κ_n‖.
  double range_residual = 0.0;
  std::vector<Index> flag_ranks;
  bool ok(double tol = 1e-9) const { return vanishing_residual <= tol && range_residual <= tol; }
};

/// Checks κ against the flag of ranges it generates itself.
SqueezingCheck check_squeezing(const Squeezing& kappa, int d, double rank_tol = kRankTol);

/// Checks κ against the embedded copy of a given space: range κ_n = range λ_n
/// and κ_n vanishes on H ⊗ (range λ_{n-1})^⊥.
SqueezingCheck check_squeezing_for(const InteractingSpace& space, const Squeezing& kappa,
                                   double rank_tol = kRankTol);

/// The κ-interacting Fock space: λ from the recursion, then from_embedding.
/// Throws when κ is not a squeezing relative to its own range flag.
InteractingSpace space_from_squeezing(const Squeezing& kappa, const TruncatedFockSpace& space,
                                      const BuildOptions& opts = {});

/// Random positive family with prescribed level ranks (ranks[0] must be 1):
/// Λ_{n+1} = G_{n+1}(id_H ⊗ Λ_n) with G_{n+1} a random full-row-rank matrix,
/// so Λ_{n+1} vanishes on H ⊗ ker Λ_n by construction. L = Λ*Λ.
DeformationFamily random_poi_family(int d, int N, const std::vector<Index>& ranks,
                                    std::uint64_t seed);

struct Letter {
  bool creator = true;  // a*(x) if true, a(x) = a*(x)* otherwise
  Vec x;
};
using Word = std::vector<Letter>;  // written order; the rightmost letter acts first

/// Applies a word to the vacuum in quotient coordinates. Returns the final
/// level and coordinates (empty when the vector left the space through
/// level -1, i.e. is zero). Throws when the word climbs above level N.
struct WordImage {
  int level = 0;
  Vec coords;
};
WordImage apply_word(const Word& word, const InteractingSpace& space);

/// ⟨Ω, w Ω⟩.
cplx vacuum_expectation(const Word& word, const InteractingSpace& space);

/// w* (letters reversed and creator/annihilator swapped).
Word adjoint_word(const Word& word);

struct SpaceResiduals {
  double gram = 0.0;               // ‖Λ*Λ - L‖ / ‖L‖
  double isometry = 0.0;           // ‖ξ*ξ - id‖
  double embedding = 0.0;          // ‖ξΛ - λ‖ / ‖λ‖
  double well_definedness = 0.0;   // ‖a_n(i)Λ_n - Λ_{n+1}(e_i⊗id)‖ / ‖Λ_{n+1}‖
  double intertwining = 0.0;       // ‖ξ a_n(i) ξ* - κ(e_i ⊗ id)‖, relative
  double lambda_recursion = 0.0;   // λ rebuilt from κ vs λ
  bool vacuum_ok = true;           // r_0 = 1 and Λ_0 = [±1]
  bool spanning_ok = true;         // rank [a_n(0)|...|a_n(d-1)] = r_{n+1}
  double max_residual() const;
};

SpaceResiduals verify(const InteractingSpace& space, double rank_tol = kRankTol);

}  // namespace fock
