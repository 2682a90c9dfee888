#include "fockbench/onemode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fock {

JacobiData jacobi_from_moments(const std::vector<double>& moments, const MomentOptions& opts) {
  if (moments.empty() || moments.size() % 2 == 0)
    throw Error("jacobi_from_moments: need an odd number of moments m_0..m_{2N}");
  if (std::abs(moments[0] - 1.0) > 1e-12) throw Error("jacobi_from_moments: m_0 must be 1");
  double scale = 1.0;
  for (double m : moments) scale = std::max(scale, std::abs(m));
  for (std::size_t i = 1; i < moments.size(); i += 2)
    if (std::abs(moments[i]) > opts.odd_tol * scale)
      throw Error("jacobi_from_moments: odd moment m_" + std::to_string(i) +
                  " is nonzero; only symmetric measures are supported");

  const int N = static_cast<int>(moments.size() - 1) / 2;
  const int size = N + 1;
  auto hankel = [&](int i, int j) {
    return (i + j) % 2 == 1 ? 0.0 : moments[static_cast<std::size_t>(i + j)];
  };

  // LDL^T of the Hankel matrix; the pivots are the ℓ_n.
  Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(size, size);
  std::vector<double> pivots;
  JacobiData j;
  j.ell.push_back(1.0);
  for (int n = 0; n < size; ++n) {
    double pivot = hankel(n, n);
    for (int t = 0; t < n; ++t) pivot -= lower(n, t) * lower(n, t) * pivots[static_cast<std::size_t>(t)];
    if (n > 0) {
      const double prev = j.ell.back();
      const double thr = std::max(1.0, prev);
      if (pivot < -opts.negative_tol * thr)
        throw Error("jacobi_from_moments: Hankel matrix is not positive semidefinite at order " +
                    std::to_string(n));
      if (pivot <= opts.degenerate * thr) break;
      j.ell.push_back(pivot);
      j.k.push_back(pivot / prev);
    }
    pivots.push_back(pivot);
    for (int i = n + 1; i < size; ++i) {
      double v = hankel(i, n);
      for (int t = 0; t < n; ++t) v -= lower(i, t) * lower(n, t) * pivots[static_cast<std::size_t>(t)];
      lower(i, n) = v / pivot;
    }
  }
  while (static_cast<int>(j.k.size()) < N) {
    j.k.push_back(0.0);
    j.ell.push_back(0.0);
  }
  return j;
}

JacobiData jacobi_from_k(const std::vector<double>& k) {
  JacobiData j;
  j.k = k;
  j.ell.push_back(1.0);
  bool zero_seen = false;
  for (std::size_t n = 0; n < k.size(); ++n) {
    if (!(k[n] >= 0.0)) throw Error("jacobi_from_k: k_" + std::to_string(n + 1) + " is negative");
    if (zero_seen && k[n] != 0.0)
      throw Error("jacobi_from_k: k_" + std::to_string(n + 1) + " must vanish after an earlier zero");
    if (k[n] == 0.0) zero_seen = true;
    j.ell.push_back(j.ell.back() * k[n]);
  }
  return j;
}

std::vector<std::vector<double>> polynomials(const JacobiData& j) {
  std::vector<std::vector<double>> p{{1.0}};
  if (j.N() >= 1) p.push_back({0.0, 1.0});
  for (int n = 1; n < j.N(); ++n) {
    const auto& cur = p[static_cast<std::size_t>(n)];
    const auto& prev = p[static_cast<std::size_t>(n - 1)];
    std::vector<double> next(static_cast<std::size_t>(n + 2), 0.0);
    for (std::size_t c = 0; c < cur.size(); ++c) next[c + 1] += cur[c];
    for (std::size_t c = 0; c < prev.size(); ++c) next[c] -= j.k[static_cast<std::size_t>(n - 1)] * prev[c];
    p.push_back(std::move(next));
  }
  return p;
}

double orthogonality_residual(const JacobiData& j, const std::vector<double>& moments) {
  const auto p = polynomials(j);
  const std::size_t need = 2 * static_cast<std::size_t>(j.N()) + 1;
  if (moments.size() < need) throw Error("orthogonality_residual: not enough moments");
  double worst = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m)
    for (std::size_t n = 0; n < p.size(); ++n) {
      double pairing = 0.0;
      for (std::size_t a = 0; a < p[m].size(); ++a)
        for (std::size_t b = 0; b < p[n].size(); ++b) pairing += p[m][a] * p[n][b] * moments[a + b];
      const double expected = m == n ? j.ell[n] : 0.0;
      worst = std::max(worst, std::abs(pairing - expected) / std::max(1.0, j.ell[std::min(m, n)]));
    }
  return worst;
}

DeformationFamily onemode_family(const JacobiData& j, int N) {
  if (N > j.N()) throw Error("onemode_family: Jacobi data shorter than the cutoff");
  const auto checked = jacobi_from_k(std::vector<double>(j.k.begin(), j.k.begin() + N));
  TruncatedFockSpace space(1, N);
  std::vector<Mat> levels;
  for (int n = 0; n <= N; ++n) levels.push_back(Mat::Constant(1, 1, checked.ell[static_cast<std::size_t>(n)]));
  return make_family(space, std::move(levels));
}

InteractingSpace onemode_space(const JacobiData& j, int N, const BuildOptions& opts) {
  return build(onemode_family(j, N), opts);
}

std::vector<double> vacuum_moments(const InteractingSpace& space, int M) {
  if (space.d() != 1) throw Error("vacuum_moments: one-mode space required");
  // A closed walk of length m <= 2N + 1 never climbs above level N.
  if (M < 0 || M > 2 * space.N() + 1) throw Error("vacuum_moments: need 0 <= M <= 2N + 1 for an exact truncation");
  const Mat a_star = space.creator_operator(Vec::Ones(1));
  const Mat x = a_star + a_star.adjoint();
  Vec v = Vec::Zero(space.total_dim());
  v(0) = 1.0;
  std::vector<double> out;
  for (int m = 0; m <= M; ++m) {
    out.push_back(v(0).real());
    v = x * v;
  }
  return out;
}

}  // namespace fock
