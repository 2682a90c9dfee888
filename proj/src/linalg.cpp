#include "fockbench/linalg.hpp"

#include <algorithm>

#include <unsupported/Eigen/KroneckerProduct>

namespace fock {

Mat identity(Index n) { return Mat::Identity(n, n); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out = Eigen::kroneckerProduct(a, b).eval();
  return out;
}

Vec unit_vector(Index d, Index i) {
  if (i < 0 || i >= d) throw Error("unit_vector: index out of range");
  Vec e = Vec::Zero(d);
  e(i) = 1.0;
  return e;
}

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double hermitian_defect(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("hermitian_defect: matrix not square");
  return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

HermitianSplit split_hermitian(const Mat& h, double rel_tol) {
  if (h.rows() != h.cols()) throw Error("split_hermitian: matrix not square");
  HermitianSplit out;
  const Index n = h.rows();
  if (n == 0) {
    out.kept_vectors = Mat::Zero(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw Error("split_hermitian: eigensolver failed");
  out.all_values = es.eigenvalues();
  out.min_value = out.all_values(0);
  out.max_value = out.all_values(n - 1);
  const double threshold = rel_tol * std::max(out.max_value, 0.0);
  Index kept = 0;
  for (Index j = 0; j < n; ++j)
    if (out.max_value > 0.0 && out.all_values(j) > threshold) ++kept;
  out.kept_vectors.resize(n, kept);
  out.kept_values.resize(kept);
  // Descending order; kept eigenvalues are the top `kept` of the ascending list.
  for (Index k = 0; k < kept; ++k) {
    const Index j = n - 1 - k;
    out.kept_vectors.col(k) = es.eigenvectors().col(j);
    out.kept_values(k) = out.all_values(j);
  }
  return out;
}

namespace {

Index count_above(const RealVec& sv, double rel_tol) {
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double threshold = rel_tol * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > threshold) ++r;
  return r;
}

}  // namespace

Mat pinv(const Mat& m, double rel_tol) {
  if (m.size() == 0) return Mat::Zero(m.cols(), m.rows());
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVec& sv = svd.singularValues();
  const Index r = count_above(sv, rel_tol);
  Mat out = Mat::Zero(m.cols(), m.rows());
  for (Index k = 0; k < r; ++k)
    out += svd.matrixV().col(k) * (1.0 / sv(k)) * svd.matrixU().col(k).adjoint();
  return out;
}

Mat range_basis(const Mat& m, double rel_tol) {
  if (m.size() == 0) return Mat::Zero(m.rows(), 0);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU);
  const Index r = count_above(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(r);
}

Mat null_basis(const Mat& m, double rel_tol) {
  if (m.cols() == 0) return Mat::Zero(0, 0);
  if (m.rows() == 0) return identity(m.cols());
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Index r = count_above(svd.singularValues(), rel_tol);
  return svd.matrixV().rightCols(m.cols() - r);
}

Index numerical_rank(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(m);
  return count_above(svd.singularValues(), rel_tol);
}

double rel_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("rel_diff: shape mismatch");
  const double scale = std::max(a.norm(), b.norm());
  return scale > 0.0 ? (a - b).norm() / scale : 0.0;
}

Mat projector(const Mat& basis, Index dim) {
  if (basis.cols() == 0) return Mat::Zero(dim, dim);
  if (basis.rows() != dim) throw Error("projector: basis has wrong row count");
  return basis * basis.adjoint();
}

Mat range_intersection(const Mat& p, const Mat& q, double tol) {
  if (p.rows() != q.rows() || p.rows() != p.cols() || q.rows() != q.cols())
    throw Error("range_intersection: shape mismatch");
  const Index n = p.rows();
  Mat stacked(2 * n, n);
  stacked.topRows(n) = identity(n) - p;
  stacked.bottomRows(n) = identity(n) - q;
  // A vector lies in both ranges iff both complements annihilate it.
  Eigen::BDCSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const RealVec& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > tol) ++r;
  return svd.matrixV().rightCols(n - r);
}

}  // namespace fock
