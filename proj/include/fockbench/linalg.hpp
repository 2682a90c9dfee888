#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fock {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Raised for contract violations (bad shapes, infeasible parameters,
/// failed structural checks that make a construction meaningless).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Default relative threshold for rank decisions (singular values or
/// eigenvalues above `kRankTol * max` count as nonzero).
inline constexpr double kRankTol = 1e-10;

Mat identity(Index n);

/// Kronecker product in the big-endian convention: the left factor is the
/// most significant block index.
Mat kron(const Mat& a, const Mat& b);

/// e_i in C^d as a column.
Vec unit_vector(Index d, Index i);

double spectral_norm(const Mat& m);

/// ‖m - m*‖_F / max(1, ‖m‖_F).
double hermitian_defect(const Mat& m);

/// Eigendecomposition of a Hermitian matrix split by a relative threshold.
struct HermitianSplit {
  Mat kept_vectors;     // columns: eigenvectors with value > tol * max
  RealVec kept_values;  // matching eigenvalues (descending)
  RealVec all_values;   // every eigenvalue, ascending
  double max_value = 0.0;
  double min_value = 0.0;
};

HermitianSplit split_hermitian(const Mat& h, double rel_tol = kRankTol);

/// Moore-Penrose pseudoinverse with singular values <= rel_tol * σ_max
/// treated as zero.
Mat pinv(const Mat& m, double rel_tol = kRankTol);

/// Orthonormal basis (columns) of the column space.
Mat range_basis(const Mat& m, double rel_tol = kRankTol);

/// Orthonormal basis (columns) of the kernel.
Mat null_basis(const Mat& m, double rel_tol = kRankTol);

Index numerical_rank(const Mat& m, double rel_tol = kRankTol);

/// ‖a - b‖_F / max(‖a‖_F, ‖b‖_F); zero when both vanish.
double rel_diff(const Mat& a, const Mat& b);

/// Orthogonal projection onto the span of the orthonormal columns of `basis`.
Mat projector(const Mat& basis, Index dim);

/// Orthonormal basis of the intersection of the ranges of two orthogonal
/// projections, computed from the kernel of the stacked complements.
/// Complements of projections have norm <= 1, so `tol` is absolute.
Mat range_intersection(const Mat& p, const Mat& q, double tol = 1e-8);

}  // namespace fock
