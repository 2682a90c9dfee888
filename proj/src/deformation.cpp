#include "fockbench/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fock {

DeformationFamily make_family(const TruncatedFockSpace& space, std::vector<Mat> levels) {
  if (static_cast<int>(levels.size()) != space.N() + 1)
    throw Error("make_family: expected N + 1 levels");
  for (int n = 0; n <= space.N(); ++n) {
    const Mat& l = levels[static_cast<std::size_t>(n)];
    if (l.rows() != space.dim(n) || l.cols() != space.dim(n))
      throw Error("make_family: level " + std::to_string(n) + " has wrong shape");
  }
  if (std::abs(levels[0](0, 0) - cplx(1.0)) > 0.0)
    throw Error("make_family: L_0 must be exactly [1]");
  return DeformationFamily{space, std::move(levels)};
}

DeformationFamily identity_family(const TruncatedFockSpace& space) {
  std::vector<Mat> levels;
  for (int n = 0; n <= space.N(); ++n) levels.push_back(identity(space.dim(n)));
  return DeformationFamily{space, std::move(levels)};
}

namespace {

void check_q(double q) {
  if (!(q >= -1.0 && q <= 1.0)) throw Error("q_fock: q must lie in [-1, 1]");
}

Mat q_fock_level_naive(int n, int d, double q) {
  Index dim = 1;
  for (int k = 0; k < n; ++k) dim *= d;
  Mat l = Mat::Zero(dim, dim);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const auto act = permutation_action(sigma, d);
    const double w = std::pow(q, act.inversions);
    if (w == 0.0) continue;
    for (Index j = 0; j < dim; ++j) l(act.image[static_cast<std::size_t>(j)], j) += w;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return l;
}

// Column map of C_k on level n + 1: C_k e_a = e_b with
// b = (a_k, a_0, ..., a_{k-1}, a_{k+1}, ..., a_n).
std::vector<Index> cycle_to_front(int k, int n_plus_1, int d, Index dim) {
  std::vector<Index> image(static_cast<std::size_t>(dim));
  std::vector<int> b(static_cast<std::size_t>(n_plus_1));
  for (Index j = 0; j < dim; ++j) {
    const auto a = decode_index(static_cast<std::size_t>(j), n_plus_1, d);
    b[0] = a[static_cast<std::size_t>(k)];
    int t = 1;
    for (int s = 0; s < n_plus_1; ++s)
      if (s != k) b[static_cast<std::size_t>(t++)] = a[static_cast<std::size_t>(s)];
    image[static_cast<std::size_t>(j)] = static_cast<Index>(encode_index(b, d));
  }
  return image;
}

}  // namespace

DeformationFamily q_fock_recursive(const TruncatedFockSpace& space, double q) {
  check_q(q);
  const int d = space.d();
  std::vector<Mat> levels{identity(1)};
  for (int n = 0; n < space.N(); ++n) {
    const Mat lifted = lift_left(levels.back(), d, 1);  // id_H ⊗ L_n
    const Index dim = space.dim(n + 1);
    Mat next = Mat::Zero(dim, dim);
    for (int k = 0; k <= n; ++k) {
      const double w = std::pow(q, k);
      if (w == 0.0) continue;
      // (M C_k) e_j = M e_{image(j)}
      const auto image = cycle_to_front(k, n + 1, d, dim);
      for (Index j = 0; j < dim; ++j) next.col(j) += w * lifted.col(image[static_cast<std::size_t>(j)]);
    }
    levels.push_back(std::move(next));
  }
  return DeformationFamily{space, std::move(levels)};
}

DeformationFamily q_fock(const TruncatedFockSpace& space, double q, QFockPath path) {
  check_q(q);
  if (path == QFockPath::Recursive) return q_fock_recursive(space, q);
  if (path == QFockPath::Naive && space.N() > kNaiveQFockMaxLevel)
    throw Error("q_fock: enumeration of S_n is capped at n = " +
                std::to_string(kNaiveQFockMaxLevel) + "; use the recursive path");
  if (path == QFockPath::Auto && space.N() > kAutoNaiveLevel) return q_fock_recursive(space, q);
  std::vector<Mat> levels;
  for (int n = 0; n <= space.N(); ++n) levels.push_back(q_fock_level_naive(n, space.d(), q));
  return DeformationFamily{space, std::move(levels)};
}

DeformationFamily discrete_monotone(const TruncatedFockSpace& space) {
  std::vector<Mat> levels;
  for (int n = 0; n <= space.N(); ++n) {
    const Index dim = space.dim(n);
    Mat l = Mat::Zero(dim, dim);
    for (Index j = 0; j < dim; ++j) {
      const auto a = decode_index(static_cast<std::size_t>(j), n, space.d());
      bool decreasing = true;
      for (int t = 0; t + 1 < n; ++t)
        if (!(a[static_cast<std::size_t>(t)] > a[static_cast<std::size_t>(t + 1)])) decreasing = false;
      if (decreasing) l(j, j) = 1.0;
    }
    levels.push_back(std::move(l));
  }
  return DeformationFamily{space, std::move(levels)};
}

DeformationFamily two_space_family(const Mat& phi) {
  if (phi.rows() != phi.cols() || phi.rows() < 1)
    throw Error("two_space_family: Φ must be a square d × d coefficient matrix");
  const int d = static_cast<int>(phi.rows());
  TruncatedFockSpace space(d, 2);
  // Row functional X ↦ Σ_{ij} Φ_ij X_{(i,j)} in the big-endian encoding.
  Mat row(1, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) row(0, i * d + j) = phi(i, j);
  std::vector<Mat> levels{identity(1), identity(d), row.adjoint() * row};
  return DeformationFamily{space, std::move(levels)};
}

ValidationReport validate(const DeformationFamily& family, const ValidationOptions& opts) {
  const auto& space = family.space;
  const int d = space.d();
  ValidationReport report;
  report.vacuum_ok = family.L.size() == static_cast<std::size_t>(space.N() + 1) &&
                     family.L[0].rows() == 1 && std::abs(family.L[0](0, 0) - cplx(1.0)) <= 1e-14;

  std::vector<Mat> herm;
  for (int n = 0; n <= space.N(); ++n) {
    const Mat& l = family.L[static_cast<std::size_t>(n)];
    LevelValidation lv;
    lv.level = n;
    lv.hermitian_defect = hermitian_defect(l);
    if (lv.hermitian_defect > opts.hermitian_error)
      throw Error("validate: L_" + std::to_string(n) + " is not Hermitian (defect " +
                  std::to_string(lv.hermitian_defect) + ")");
    lv.symmetrized = lv.hermitian_defect > 0.0;
    Mat h = 0.5 * (l + l.adjoint());
    const auto split = split_hermitian(h, opts.rank_tol);
    lv.min_eigenvalue = split.min_value;
    lv.max_eigenvalue = split.max_value;
    lv.psd = split.min_value >= -opts.psd_tol * std::max(split.max_value, 0.0);
    report.psd_ok = report.psd_ok && lv.psd;
    report.levels.push_back(lv);
    herm.push_back(std::move(h));
  }

  for (int n = 0; n < space.N(); ++n) {
    auto& lv = report.levels[static_cast<std::size_t>(n)];
    const Mat kernel = null_basis(herm[static_cast<std::size_t>(n)], opts.rank_tol);
    lv.kernel_dim = kernel.cols();
    if (kernel.cols() == 0) continue;
    const Mat& next = herm[static_cast<std::size_t>(n + 1)];
    const double scale = spectral_norm(next);
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      const Mat image = next * kron(Mat(unit_vector(d, i)), kernel);
      for (Index c = 0; c < image.cols(); ++c) worst = std::max(worst, image.col(c).norm());
    }
    lv.kernel_violation = scale > 0.0 ? worst / scale : 0.0;
    lv.kernel_ok = lv.kernel_violation <= opts.kernel_tol;
    report.kernel_ok = report.kernel_ok && lv.kernel_ok;
  }
  report.levels.back().kernel_dim =
      null_basis(herm.back(), opts.rank_tol).cols();
  return report;
}

KernelFactorization factor_K(const DeformationFamily& family, double tol, double rank_tol) {
  const int d = family.space.d();
  KernelFactorization out;
  out.K.push_back(identity(1));
  out.residuals.push_back(0.0);
  for (int n = 0; n < family.space.N(); ++n) {
    const Mat& ln = family.L[static_cast<std::size_t>(n)];
    const Mat& next = family.L[static_cast<std::size_t>(n + 1)];
    // pinv(id ⊗ L_n) = id ⊗ pinv(L_n)
    const Mat k = next * lift_left(pinv(ln, rank_tol), d, 1);
    const double denom = next.norm();
    const double res = (next - k * lift_left(ln, d, 1)).norm();
    const double rel = denom > 0.0 ? res / denom : res;
    out.K.push_back(k);
    out.residuals.push_back(rel);
    out.max_residual = std::max(out.max_residual, rel);
  }
  if (out.max_residual > tol)
    throw Error("factor_K: reconstruction residual " + std::to_string(out.max_residual) +
                " above tolerance; the kernel condition fails");
  return out;
}

std::vector<Mat> reconstruct_from_K(const std::vector<Mat>& K, int d) {
  if (K.empty()) throw Error("reconstruct_from_K: empty family");
  std::vector<Mat> L{identity(1)};
  for (std::size_t n = 1; n < K.size(); ++n) {
    const Mat lifted = lift_left(L.back(), d, 1);
    if (K[n].cols() != lifted.rows()) throw Error("reconstruct_from_K: shape mismatch");
    L.push_back(K[n] * lifted);
  }
  return L;
}

}  // namespace fock
