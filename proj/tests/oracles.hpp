#pragma once

// Reference computations for the tests. Each one avoids the library routine it
// checks: explicit loops instead of Kronecker helpers, recursion instead of
// permutation sums, Gram–Schmidt instead of LDL pivots, bisection instead of
// generalized eigenproblems.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Entry-by-entry Kronecker product, left factor most significant.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline int count_inversions(const std::vector<int>& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) c += s[i] > s[j];
  return c;
}

/// (τ∘σ)[k] = τ[σ[k]].
inline std::vector<int> compose(const std::vector<int>& tau, const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) out[k] = tau[static_cast<std::size_t>(sigma[k])];
  return out;
}

/// Elementary tensor x_1⊗...⊗x_n as a flat vector (x_1 most significant).
inline Vec tensor(const std::vector<Vec>& factors) {
  Vec v = Vec::Ones(1);
  for (const auto& x : factors) {
    Vec next(v.size() * x.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      for (Eigen::Index j = 0; j < x.size(); ++j) next(i * x.size() + j) = v(i) * x(j);
    v = next;
  }
  return v;
}

/// q-deformed inner product of elementary tensors through the expansion
/// along the first factor: <x_1..x_n, y_1..y_n>_q = Σ_k q^{k-1} <x_1, y_k> <x_2..x_n, y without y_k>_q.
inline cplx q_inner(const std::vector<Vec>& x, const std::vector<Vec>& y, double q) {
  if (x.empty()) return 1.0;
  cplx total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    std::vector<Vec> rest(y);
    rest.erase(rest.begin() + static_cast<long>(k));
    const std::vector<Vec> xt(x.begin() + 1, x.end());
    total += std::pow(q, static_cast<double>(k)) * x[0].dot(y[k]) * q_inner(xt, rest, q);
  }
  return total;
}

/// Monic orthogonal polynomials by Gram–Schmidt of 1, t, t², ... under the
/// moment pairing; returns the squared norms ℓ_0..ℓ_K.
inline std::vector<double> gram_schmidt_norms(const std::vector<double>& moments) {
  const int K = static_cast<int>(moments.size() - 1) / 2;
  auto pair = [&](const std::vector<double>& p, const std::vector<double>& r) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) s += p[i] * r[j] * moments[i + j];
    return s;
  };
  std::vector<std::vector<double>> P;
  std::vector<double> ell;
  for (int n = 0; n <= K; ++n) {
    std::vector<double> p(static_cast<std::size_t>(n + 1), 0.0);
    p[static_cast<std::size_t>(n)] = 1.0;
    for (int m = 0; m < n; ++m) {
      if (ell[static_cast<std::size_t>(m)] <= 1e-14) continue;
      const double c = pair(p, P[static_cast<std::size_t>(m)]) / ell[static_cast<std::size_t>(m)];
      for (std::size_t i = 0; i < P[static_cast<std::size_t>(m)].size(); ++i) p[i] -= c * P[static_cast<std::size_t>(m)][i];
    }
    ell.push_back(pair(p, p));
    P.push_back(p);
  }
  return ell;
}

/// ℓ_n = Δ_{n+1}/Δ_n with Δ_n the n×n Hankel determinant.
inline std::vector<double> hankel_determinant_norms(const std::vector<double>& moments) {
  const int K = static_cast<int>(moments.size() - 1) / 2;
  std::vector<double> delta{1.0};
  for (int n = 1; n <= K + 1; ++n) {
    Eigen::MatrixXd H(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H(i, j) = moments[static_cast<std::size_t>(i + j)];
    delta.push_back(H.determinant());
  }
  std::vector<double> ell;
  for (int n = 0; n <= K; ++n) ell.push_back(delta[static_cast<std::size_t>(n + 1)] / delta[static_cast<std::size_t>(n)]);
  return ell;
}

/// Moments m_0..m_{2K} of Σ_i w_i (δ_{t_i} + δ_{-t_i}) / 2 with Σ w_i = 1.
inline std::vector<double> symmetric_atoms_moments(const std::vector<double>& t, const std::vector<double>& w, int K) {
  std::vector<double> m;
  for (int p = 0; p <= 2 * K; ++p) {
    double s = 0.0;
    if (p % 2 == 0)
      for (std::size_t i = 0; i < t.size(); ++i) s += w[i] * std::pow(t[i], p);
    m.push_back(s);
  }
  return m;
}

inline double min_eigenvalue(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Least M² with B <= M² L, by bisection on the smallest eigenvalue of
/// t L - B (B assumed to vanish on ker L).
inline double pencil_bisection(const Mat& B, const Mat& L) {
  const double scale = std::max(1.0, L.norm());
  auto feasible = [&](double t) { return min_eigenvalue(t * L - B) >= -1e-12 * scale * std::max(1.0, t); };
  double lo = 0.0, hi = 1.0;
  while (!feasible(hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// max over a grid of unit vectors x = (cos θ, e^{iφ} sin θ) of f(x).
inline double sphere_search_2d(const std::function<double(const Vec&)>& f, int steps) {
  const double pi = std::acos(-1.0);
  double best = 0.0;
  for (int a = 0; a <= steps; ++a)
    for (int b = 0; b < 2 * steps; ++b) {
      const double th = 0.5 * pi * a / steps, ph = pi * b / steps;
      Vec x(2);
      x << std::cos(th), std::polar(std::sin(th), ph);
      best = std::max(best, f(x));
    }
  return best;
}

/// Counts ±1 sequences of length n with total 0 whose every suffix sum is
/// nonnegative, by visiting all 2^n sequences.
inline std::uint64_t count_dyck_bruteforce(int n) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int sum = 0;
    bool ok = true;
    for (int k = n - 1; k >= 0; --k) {
      sum += (mask >> k) & 1 ? 1 : -1;
      ok = ok && sum >= 0;
    }
    count += ok && sum == 0;
  }
  return count;
}

}  // namespace oracle
