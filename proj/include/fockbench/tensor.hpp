#pragma once

// Dense tensor-level arithmetic on the truncated full Fock space
// F(H) = ΩC ⊕ H ⊕ H⊗H ⊕ ... ⊕ H^{⊗N} with H = C^d.
//
// Flat index convention (used everywhere in the library): a multi-index
// (i_1, ..., i_n) written left to right, i.e. the tensor e_{i_1}⊗...⊗e_{i_n},
// maps to Σ_k i_k d^{n-k}. The leftmost factor is the most significant, which
// makes the matrix of x ⊗ (·) equal to kron(x, id).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fockbench/linalg.hpp"

namespace fock {

/// Default upper bound on d^n for any level that is stored densely.
inline constexpr std::int64_t kDefaultLevelCap = 200000;

/// The active cap: FOCKBENCH_LEVEL_CAP when set to a positive integer,
/// otherwise kDefaultLevelCap.
std::int64_t level_cap();

class TruncatedFockSpace {
public:
  TruncatedFockSpace(int d, int N);
  TruncatedFockSpace(int d, int N, std::int64_t cap);

  int d() const { return d_; }
  int N() const { return N_; }

  /// d^n, for 0 <= n <= N.
  Index dim(int n) const;
  Index total_dim() const;

  bool operator==(const TruncatedFockSpace&) const = default;

private:
  int d_;
  int N_;
};

std::size_t encode_index(std::span<const int> multi_index, int d);
std::vector<int> decode_index(std::size_t flat, int n, int d);

/// Element of the truncated full Fock space, one dense vector per level.
struct GradedVector {
  std::vector<Vec> levels;

  static GradedVector zero(const TruncatedFockSpace& space);
  static GradedVector vacuum(const TruncatedFockSpace& space);

  double squared_norm() const;
  double norm() const;
  cplx inner(const GradedVector& other) const;  // antilinear in *this
};

/// Operator of fixed degree g: block n maps level n to level n + g.
/// Blocks exist for every n with both n and n + g inside [0, N]; the
/// operator is zero elsewhere (truncation).
struct GradedOperator {
  int degree = 0;
  int first_level = 0;  // source level of blocks[0]
  std::vector<Mat> blocks;

  const Mat& block(int source_level) const;
  bool has_block(int source_level) const;

  GradedVector apply(const GradedVector& x) const;
  GradedOperator adjoint() const;
};

/// ℓ*(x): X ↦ x ⊗ X, Ω ↦ x.
GradedOperator left_creator(const Vec& x, const TruncatedFockSpace& space);

/// ℓ(x) = ℓ*(x)*; annihilates the vacuum.
GradedOperator left_annihilator(const Vec& x, const TruncatedFockSpace& space);

/// X ↦ X ⊗ x.
GradedOperator right_creator(const Vec& x, const TruncatedFockSpace& space);

/// id_{H^{⊗k}} ⊗ m, for a square or rectangular block m.
Mat lift_left(const Mat& m, int d, int k);

/// m ⊗ id_{H^{⊗k}}.
Mat lift_right(const Mat& m, int d, int k);

/// Matrix of x ⊗ id_{H^{⊗n}}: H^{⊗n} → H^{⊗(n+1)}.
Mat creator_block(const Vec& x, int d, int n);

/// Number of pairs i < j with σ(i) > σ(j).
int inversions(std::span<const int> sigma);

/// Inversions counted by sorting with adjacent swaps (independent route).
int bubble_sort_swaps(std::span<const int> sigma);

bool is_permutation(std::span<const int> sigma);

/// Tensor-factor permutation with the factors labelled n, ..., 1 from left to
/// right: x_n⊗...⊗x_1 ↦ x_{σ(n)}⊗...⊗x_{σ(1)}. `sigma[k]` holds σ(k+1) - 1.
/// With this labelling P_σ P_τ = P_{τ∘σ}.
struct PermutationAction {
  std::vector<Index> image;  // basis index j ↦ image[j]
  int inversions = 0;
};

PermutationAction permutation_action(std::span<const int> sigma, int d);
Mat permutation_operator(std::span<const int> sigma, const TruncatedFockSpace& space,
                         int* inversion_count = nullptr);

}  // namespace fock
