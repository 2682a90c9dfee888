#include "fockbench/subproduct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fockbench/random.hpp"

namespace fock {

ProjectionFamily make_projection_family(const TruncatedFockSpace& space, std::vector<Mat> pi, double tol) {
  if (static_cast<int>(pi.size()) != space.N() + 1) throw Error("projection family: expected N + 1 levels");
  ProjectionFamily f;
  f.space = space;
  for (int n = 0; n <= space.N(); ++n) {
    const Mat& p = pi[static_cast<std::size_t>(n)];
    if (p.rows() != space.dim(n) || p.cols() != space.dim(n))
      throw Error("projection family: level " + std::to_string(n) + " has wrong shape");
    if ((p - p.adjoint()).norm() > tol)
      throw Error("projection family: π_" + std::to_string(n) + " is not Hermitian");
    if ((p * p - p).norm() > tol)
      throw Error("projection family: π_" + std::to_string(n) + " is not idempotent");
    f.ranks.push_back(numerical_rank(p));
  }
  if (std::abs(pi[0](0, 0) - cplx(1.0)) > tol) throw Error("projection family: π_0 must be [1]");
  pi[0] = identity(1);
  f.pi1_is_identity = space.N() >= 1 && (pi[1] - identity(space.d())).norm() <= tol;
  f.pi = std::move(pi);
  return f;
}

ProjectionFamily symmetrizer_family(const TruncatedFockSpace& space) {
  auto q1 = q_fock(space, 1.0);
  double factorial = 1.0;
  for (int n = 1; n <= space.N(); ++n) {
    factorial *= n;
    q1.L[static_cast<std::size_t>(n)] /= factorial;
  }
  return make_projection_family(space, std::move(q1.L));
}

ProjectionFamily full_projection_family(const TruncatedFockSpace& space) {
  return make_projection_family(space, identity_family(space).L);
}

ProjectionFamily product_tensor_family(int d, int N) {
  if (d < N) throw Error("product_tensor_family: need d >= N");
  TruncatedFockSpace space(d, N);
  std::vector<Mat> pi{identity(1)};
  for (int n = 1; n <= N; ++n) {
    Mat p = Mat::Zero(d, d);
    p(n - 1, n - 1) = 1.0;
    pi.push_back(kron(p, pi.back()));  // p_n ⊗ (p_{n-1}⊗...⊗p_1)
  }
  return make_projection_family(space, std::move(pi));
}

double order_violation(const Mat& p, const Mat& q) {
  if (p.size() == 0) return 0.0;
  return spectral_norm((identity(q.rows()) - q) * p);
}

namespace {

double opnorm(const Mat& m) { return m.size() == 0 ? 0.0 : spectral_norm(m); }

}  // namespace

ProductMaps product_maps(const ProjectionFamily& family, double tol) {
  const int N = family.space.N();
  const int d = family.space.d();
  for (int n = 0; n < N; ++n) {
    const Mat& p = family.pi[static_cast<std::size_t>(n)];
    const Mat& next = family.pi[static_cast<std::size_t>(n + 1)];
    if (order_violation(next, lift_left(p, d, 1)) > tol || order_violation(next, lift_right(p, d, 1)) > tol)
      throw Error("product_maps: the family is not a subproduct system at level " + std::to_string(n + 1));
  }
  ProductMaps out;
  for (int n = 0; n <= N; ++n) out.bases.push_back(range_basis(family.pi[static_cast<std::size_t>(n)]));
  auto r = [&](int n) { return out.bases[static_cast<std::size_t>(n)].cols(); };
  out.maps.assign(static_cast<std::size_t>(N + 1), {});
  for (int m = 0; m <= N; ++m)
    for (int n = 0; m + n <= N; ++n) {
      const Mat& bm = out.bases[static_cast<std::size_t>(m)];
      const Mat& bn = out.bases[static_cast<std::size_t>(n)];
      const Mat& bmn = out.bases[static_cast<std::size_t>(m + n)];
      Mat v = Mat::Zero(r(m + n), r(m) * r(n));
      if (v.size() > 0) v = bmn.adjoint() * kron(bm, bn);
      if (v.rows() > 0)
        out.coisometry_residual = std::max(out.coisometry_residual, opnorm(v * v.adjoint() - identity(v.rows())));
      out.maps[static_cast<std::size_t>(m)].push_back(std::move(v));
    }
  auto map = [&](int m, int n) -> const Mat& { return out.maps[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]; };
  for (int m = 1; m <= N; ++m)
    for (int n = 1; m + n <= N; ++n)
      for (int k = 1; m + n + k <= N; ++k) {
        if (r(m + n + k) == 0 || r(m) * r(n) * r(k) == 0) continue;
        const Mat lhs = map(m + n, k) * kron(map(m, n), identity(r(k)));
        const Mat rhs = map(m, n + k) * kron(identity(r(m)), map(n, k));
        out.associativity_residual = std::max(out.associativity_residual, opnorm(lhs - rhs));
      }
  return out;
}

SubproductCertificate certify(const ProjectionFamily& family, double tol) {
  const int N = family.space.N();
  const int d = family.space.d();
  SubproductCertificate c;
  c.tol = tol;
  for (int n = 0; n < N; ++n) {
    const Mat& p = family.pi[static_cast<std::size_t>(n)];
    const Mat& next = family.pi[static_cast<std::size_t>(n + 1)];
    c.pirec.push_back(order_violation(next, lift_left(p, d, 1)));
    c.spsker.push_back(order_violation(next, lift_right(p, d, 1)));
    c.max_pirec = std::max(c.max_pirec, c.pirec.back());
    c.max_spsker = std::max(c.max_spsker, c.spsker.back());
  }
  for (int m = 1; m <= N; ++m)
    for (int n = 1; m + n <= N; ++n) {
      PairwiseCheck pc;
      pc.m = m;
      pc.n = n;
      pc.violation = order_violation(family.pi[static_cast<std::size_t>(m + n)],
                                     kron(family.pi[static_cast<std::size_t>(m)], family.pi[static_cast<std::size_t>(n)]));
      c.max_pairwise = std::max(c.max_pairwise, pc.violation);
      c.pairwise.push_back(pc);
    }
  c.pirec_ok = c.max_pirec <= tol;
  c.spsker_ok = c.max_spsker <= tol;
  c.pairwise_ok = c.max_pairwise <= tol;
  c.inconsistent = c.pirec_ok && c.spsker_ok && !c.pairwise_ok;
  if (c.pirec_ok && c.spsker_ok) {
    const auto pm = product_maps(family, tol);
    c.products_checked = true;
    c.coisometry_residual = pm.coisometry_residual;
    c.associativity_residual = pm.associativity_residual;
  }
  return c;
}

double PiSpace::max_deviation() const { return std::max({lambda_deviation, kappa_deviation, L_deviation}); }

PiSpace pi_space(const ProjectionFamily& family, double tol) {
  const int d = family.space.d();
  for (int n = 0; n < family.space.N(); ++n)
    if (order_violation(family.pi[static_cast<std::size_t>(n + 1)], lift_left(family.pi[static_cast<std::size_t>(n)], d, 1)) > tol)
      throw Error("pi_space: π_" + std::to_string(n + 1) + " is not dominated by id⊗π_" + std::to_string(n) +
                  "; π is not a squeezing");
  PiSpace out;
  out.space = build(make_family(family.space, family.pi));
  out.kappa = squeezing_of(out.space);
  for (int n = 0; n <= family.space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Mat& p = family.pi[un];
    out.L_deviation = std::max(out.L_deviation, (out.space.L[un] - p).norm());
    out.lambda_deviation = std::max(out.lambda_deviation, (out.space.lambda[un] - p).norm());
    out.kappa_deviation = std::max(out.kappa_deviation, (out.kappa.kappa[un] - p).norm());
  }
  return out;
}

ProjectionFamily random_adjacent_family(int d, int N, const std::vector<int>& ranks, std::uint64_t seed) {
  TruncatedFockSpace space(d, N);
  if (static_cast<int>(ranks.size()) != N + 1) throw Error("random_adjacent_family: need N + 1 ranks");
  if (ranks[0] != 1 && ranks[0] != -1) throw Error("random_adjacent_family: π_0 has rank 1");
  Rng rng(seed);
  std::vector<Mat> pi{identity(1)};
  for (int n = 0; n < N; ++n) {
    const Mat& p = pi.back();
    const Mat allowed = n == 0 ? identity(d) : range_intersection(lift_left(p, d, 1), lift_right(p, d, 1));
    const int avail = static_cast<int>(allowed.cols());
    int r = ranks[static_cast<std::size_t>(n + 1)];
    if (r < 0) r = avail == 0 ? 0 : rng.uniform_int(1, avail);
    if (r > avail)
      throw Error("random_adjacent_family: rank " + std::to_string(r) + " requested at level " +
                  std::to_string(n + 1) + " but the admissible subspace has dimension " + std::to_string(avail));
    const Index dim = space.dim(n + 1);
    if (r == 0) {
      pi.push_back(Mat::Zero(dim, dim));
      continue;
    }
    const Mat g = rng.gaussian(avail, r);
    const Mat q = Eigen::HouseholderQR<Mat>(g).householderQ() * Mat::Identity(avail, r);
    const Mat basis = allowed * q;
    const Mat proj = basis * basis.adjoint();
    pi.push_back(0.5 * (proj + proj.adjoint()));
  }
  return make_projection_family(space, std::move(pi));
}

TwoSidedResult two_sided_test(const InteractingSpace& space, double tol) {
  const int d = space.d();
  TwoSidedResult out;
  out.exists = true;
  for (int n = 0; n < space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Mat& next = space.lambda[un + 1];
    const Mat kernel = null_basis(space.lambda[un]);
    double worst = 0.0;
    const double scale = opnorm(next);
    if (kernel.cols() > 0 && scale > 0.0)
      for (int i = 0; i < d; ++i) {
        const Mat image = next * kron(kernel, Mat(unit_vector(d, i)));
        for (Index c = 0; c < image.cols(); ++c) worst = std::max(worst, image.col(c).norm() / scale);
      }
    out.right_kernel_residual.push_back(worst);
    if (worst > tol) out.exists = false;
  }
  const auto kappa = squeezing_of(space);
  for (const auto& k : kappa.kappa) out.kappa_norms.push_back(opnorm(k));
  out.kappa_contraction = *std::max_element(out.kappa_norms.begin(), out.kappa_norms.end()) <= 1.0 + tol;
  if (!out.exists) return out;

  out.kappa_prime.push_back(identity(1));
  out.kappa_prime_norms.push_back(1.0);
  for (int n = 0; n < space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Mat& next = space.lambda[un + 1];
    Mat kp = next * lift_right(pinv(space.lambda[un]), d, 1);
    const double scale = next.norm();
    const double res = (next - kp * lift_right(space.lambda[un], d, 1)).norm();
    out.factorization_residual = std::max(out.factorization_residual, scale > 0.0 ? res / scale : res);
    out.kappa_prime_norms.push_back(opnorm(kp));
    out.kappa_prime.push_back(std::move(kp));
  }
  out.kappa_prime_contraction =
      *std::max_element(out.kappa_prime_norms.begin(), out.kappa_prime_norms.end()) <= 1.0 + tol;
  return out;
}

}  // namespace fock
