#include "fockbench/boundedness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fockbench/random.hpp"

namespace fock {

namespace {

double norm2(const Mat& m) { return m.size() == 0 ? 0.0 : spectral_norm(m); }

double top_eigenvalue(const Mat& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Vec top_right_singular_vector(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(0);
}

}  // namespace

std::vector<LevelConstants> level_constants(const InteractingSpace& space, const Vec& x, double kernel_tol) {
  const int d = space.d();
  if (x.size() != d) throw Error("level_constants: x has wrong dimension");
  std::vector<LevelConstants> rows;
  for (int n = 0; n < space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    LevelConstants row;
    row.level = n;
    row.creator_norm = norm2(space.creator(n, x));

    const Mat shift = creator_block(x, d, n);
    row.kappa_form_norm = norm2(space.lambda[un + 1] * shift * pinv(space.lambda[un]));

    // Pencil B <= M² L_n reduced to the range of L_n.
    const Mat B = shift.adjoint() * space.L[un + 1] * shift;
    const Mat kernel = null_basis(space.L[un]);
    const double b_scale = B.norm();
    if (kernel.cols() > 0 && b_scale > 0.0) row.kernel_compat = (B * kernel).norm() / b_scale;
    if (row.kernel_compat > kernel_tol)
      throw Error("level_constants: (x⊗id)*L_{n+1}(x⊗id) does not vanish on ker L_n at level " +
                  std::to_string(n));
    const auto split = split_hermitian(space.L[un]);
    if (split.kept_values.size() > 0) {
      const RealVec inv_root = split.kept_values.cwiseSqrt().cwiseInverse();
      const Mat reduced = inv_root.asDiagonal() * (split.kept_vectors.adjoint() * B * split.kept_vectors) *
                          inv_root.asDiagonal();
      row.pencil_constant = std::sqrt(std::max(0.0, top_eigenvalue(reduced)));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CreatorMapConstant> creator_map_constants(const InteractingSpace& space, std::uint64_t seed) {
  const int d = space.d();
  const bool exact = d <= kExactCreatorMapMaxD;
  const int starts = exact ? kCreatorMapStarts : 8;
  Rng rng(seed);
  std::vector<CreatorMapConstant> out;
  for (int n = 0; n < space.N(); ++n) {
    const auto& a = space.creators[static_cast<std::size_t>(n)];
    CreatorMapConstant c;
    c.level = n;
    c.exact = exact;
    const Index rows = space.ranks[static_cast<std::size_t>(n + 1)];
    const Index cols = space.ranks[static_cast<std::size_t>(n)];
    if (rows == 0 || cols == 0) {
      out.push_back(c);
      continue;
    }
    for (int s = 0; s < starts + d; ++s) {
      // The first d starts are the basis vectors, the rest random.
      Vec x = s < d ? unit_vector(d, s) : rng.gaussian_vector(d).normalized();
      double value = 0.0;
      for (int it = 0; it < 500; ++it) {
        Mat ax = Mat::Zero(rows, cols);
        for (int i = 0; i < d; ++i) ax += x(i) * a[static_cast<std::size_t>(i)];
        const Vec y = top_right_singular_vector(ax);
        Mat g(rows, d);
        for (int i = 0; i < d; ++i) g.col(i) = a[static_cast<std::size_t>(i)] * y;
        x = top_right_singular_vector(g);
        const double next = (g * x).norm();
        const bool done = next <= value * (1.0 + 1e-14);
        value = std::max(value, next);
        if (done) break;
      }
      c.value = std::max(c.value, value);
    }
    out.push_back(c);
  }
  return out;
}

double kappa_norm(const InteractingSpace& space) {
  const auto k = squeezing_of(space);
  double worst = 0.0;
  for (const auto& m : k.kappa) worst = std::max(worst, norm2(m));
  return worst;
}

GrowthFit diagnose_growth(const std::vector<double>& xs, const std::vector<double>& ys, double flat_slope) {
  if (xs.size() != ys.size()) throw Error("diagnose_growth: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] > 0.0 && ys[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  GrowthFit fit;
  if (lx.size() >= 2) {
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.log_intercept = my - fit.slope * mx;
  }
  fit.label = fit.slope > flat_slope ? "diverging" : "bounded";
  return fit;
}

BoundsReport bounds_report(const InteractingSpace& space, const Vec& x, std::uint64_t seed) {
  BoundsReport r;
  r.levels = level_constants(space, x);
  r.creator_map = creator_map_constants(space, seed);
  r.x_norm = x.norm();
  r.kappa_norm = kappa_norm(space);
  std::vector<double> xs, ys;
  for (const auto& row : r.levels) {
    xs.push_back(row.level + 1.0);
    ys.push_back(row.pencil_constant);
  }
  r.creator_growth = diagnose_growth(xs, ys);
  return r;
}

// --- grid ------------------------------------------------------------------

namespace {

RealVec midpoints(int m) {
  RealVec t(m);
  for (int j = 0; j < m; ++j) t(j) = (j + 0.5) / m;
  return t;
}

}  // namespace

DeformationFamily grid_family(int m) {
  if (m < 2) throw Error("grid_family: need at least two cells");
  TruncatedFockSpace space(m, 2);
  std::vector<Mat> levels{identity(1), Mat(midpoints(m).cast<cplx>().asDiagonal()), identity(space.dim(2))};
  return make_family(space, std::move(levels));
}

Vec grid_constant_one(int m) { return Vec::Constant(m, 1.0 / std::sqrt(static_cast<double>(m))); }

double grid_ratio(int m, const Vec& x) {
  if (m < 2) throw Error("grid_ratio: need at least two cells");
  if (x.size() != m) throw Error("grid_ratio: x has wrong dimension");
  const RealVec t = midpoints(m);
  Vec y = Vec::Zero(m);
  y(0) = 1.0 / std::sqrt(static_cast<double>(m));
  // ‖a*(x)y‖² = ⟨x⊗y, L_2 x⊗y⟩ = ‖x‖²‖y‖²,  ‖y‖² = ⟨y, L_1 y⟩.
  double denom = 0.0;
  for (int j = 0; j < m; ++j) denom += t(j) * std::norm(y(j));
  return std::sqrt(x.squaredNorm() * y.squaredNorm() / denom);
}

GridDemo demo_bounded_L_unbounded_creators(const std::vector<int>& grids) {
  GridDemo demo;
  std::vector<double> xs, ys;
  for (int m : grids) {
    GridRow row;
    row.m = m;
    row.ratio = grid_ratio(m, grid_constant_one(m));
    row.L_max = std::max(midpoints(m).maxCoeff(), 1.0);
    demo.rows.push_back(row);
    xs.push_back(m);
    ys.push_back(row.ratio);
  }
  if (!demo.rows.empty() && demo.rows.front().ratio > 0.0)
    demo.growth_factor = demo.rows.back().ratio / demo.rows.front().ratio;
  demo.growth = diagnose_growth(xs, ys);
  return demo;
}

// --- blocks ----------------------------------------------------------------

int block_dimension(int K) {
  if (K < 1) throw Error("block_dimension: K must be positive");
  return K * (K + 1) / 2;
}

double block_constant(int K, const Vec& x) {
  if (x.size() != block_dimension(K)) throw Error("block_constant: x has wrong dimension");
  const double xx = x.squaredNorm();
  if (xx == 0.0) return 0.0;
  double worst = 0.0;
  for (int n = 1; n <= K; ++n) {
    const Vec v = x.segment(n * (n - 1) / 2, n).conjugate();
    worst = std::max(worst, top_eigenvalue(v * v.adjoint()));
  }
  return worst / xx;
}

double block_L2_norm(int K) {
  double worst = 0.0;
  for (int n = 1; n <= K; ++n) {
    Vec e = Vec::Zero(static_cast<Index>(n) * n);
    for (int i = 0; i < n; ++i) e(i * n + i) = 1.0 / std::sqrt(static_cast<double>(n));
    // n p_n = n e e* is rank one with norm n‖e‖².
    worst = std::max(worst, n * e.squaredNorm());
  }
  return worst;
}

DeformationFamily block_family(int K) {
  const int d = block_dimension(K);
  TruncatedFockSpace space(d, 2);
  Mat l2 = Mat::Zero(space.dim(2), space.dim(2));
  for (int n = 1; n <= K; ++n) {
    const int o = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l2((o + i) * d + (o + i), (o + j) * d + (o + j)) = 1.0;
  }
  return make_family(space, {identity(1), identity(d), l2});
}

BlockDemo demo_bounded_creators_unbounded_L(int K, std::uint64_t seed, int random_probes) {
  if (K < 2) throw Error("demo_bounded_creators_unbounded_L: K >= 2 required");
  const int d = block_dimension(K);
  Rng rng(seed);
  BlockDemo demo;
  demo.K = K;
  demo.L2_norm = block_L2_norm(K);
  auto probe = [&](const Vec& x) {
    demo.max_constant = std::max(demo.max_constant, block_constant(K, x));
    ++demo.probes;
  };
  probe(unit_vector(d, 0));
  for (int n = 1; n <= K; ++n) {
    Vec x = Vec::Zero(d);
    x.segment(n * (n - 1) / 2, n) = rng.gaussian_vector(n);
    probe(x);
  }
  for (int p = 0; p < random_probes; ++p) probe(rng.gaussian_vector(d));
  return demo;
}

// --- squeezing ---------------------------------------------------------------

double squeezing_ratio(int N) {
  if (N < 1) throw Error("squeezing_ratio: N >= 1 required");
  double harmonic = 0.0, squares = 0.0;
  for (int n = 1; n <= N; ++n) {
    harmonic += 1.0 / n;
    squares += 1.0 / (static_cast<double>(n) * n);
  }
  return harmonic / std::sqrt(squares);
}

Squeezing two_space_squeezing(int d, std::uint64_t seed) {
  if (d < 2) throw Error("two_space_squeezing: dim H >= 2 required");
  Rng rng(seed);
  const Vec omega2 = rng.gaussian_vector(static_cast<Index>(d) * d).normalized();
  Mat row = Mat::Zero(1, static_cast<Index>(d) * d);
  for (int i = 0; i < d; ++i) row(0, i * d + i) = 1.0;
  return Squeezing{{identity(1), identity(d), omega2 * row}};
}

double squeezing_ratio_dense(const Squeezing& kappa, int N) {
  if (kappa.kappa.size() < 3) throw Error("squeezing_ratio_dense: need κ_2");
  const Index dd = kappa.kappa[2].rows();
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dd))));
  if (N < 1 || N > d) throw Error("squeezing_ratio_dense: need 1 <= N <= dim H");
  Vec v = Vec::Zero(dd);
  for (int n = 1; n <= N; ++n) v((n - 1) * d + (n - 1)) = 1.0 / n;
  return (kappa.kappa[2] * v).norm() / v.norm();
}

SqueezingDemo demo_unbounded_squeezing(int N) {
  SqueezingDemo demo;
  std::vector<double> xs;
  for (int n = 1; n <= N; ++n) {
    demo.ratios.push_back(squeezing_ratio(n));
    xs.push_back(n);
    if (n > 1 && !(demo.ratios[static_cast<std::size_t>(n - 1)] > demo.ratios[static_cast<std::size_t>(n - 2)]))
      demo.strictly_increasing = false;
  }
  demo.growth = diagnose_growth(xs, demo.ratios);
  return demo;
}

// --- rescaling ---------------------------------------------------------------

double rescaled_ratio(const Eigen::MatrixXd& F, const std::vector<double>& c, const Mat& v) {
  const Index B = F.rows();
  cplx phi = 0.0;
  double norm_sq = 0.0;
  for (Index i = 0; i < B; ++i)
    for (Index j = 0; j < B; ++j) {
      phi += F(i, j) * v(i, j);
      const double w = c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
      norm_sq += std::norm(v(i, j)) * w * w;
    }
  return norm_sq > 0.0 ? std::abs(phi) / std::sqrt(norm_sq) : 0.0;
}

FunctionalRescaling rescale_functional(const Eigen::MatrixXd& F, std::uint64_t seed, int samples) {
  if (F.rows() != F.cols() || F.rows() < 1) throw Error("rescale_functional: F must be square");
  if ((F.array() < 0.0).any()) throw Error("rescale_functional: F must be nonnegative");
  const Index B = F.rows();
  FunctionalRescaling r;
  double running = 1.0;
  for (Index n = 0; n < B; ++n) {
    for (Index i = 0; i <= n; ++i) running = std::max({running, F(n, i), F(i, n)});
    r.f.push_back(running);
    r.c.push_back(std::ldexp(running, static_cast<int>(n + 1)));
  }
  for (Index i = 0; i < B; ++i)
    for (Index j = 0; j < B; ++j)
      if (F(i, j) > r.f[static_cast<std::size_t>(i)] * r.f[static_cast<std::size_t>(j)]) r.entry_bound_ok = false;

  double sq = 0.0;
  Mat maximizer(B, B);
  for (Index i = 0; i < B; ++i)
    for (Index j = 0; j < B; ++j) {
      const double w = r.c[static_cast<std::size_t>(i)] * r.c[static_cast<std::size_t>(j)];
      sq += (F(i, j) / w) * (F(i, j) / w);
      maximizer(i, j) = F(i, j) / (w * w);
    }
  r.exact_norm = std::sqrt(sq);
  r.maximizer_ratio = rescaled_ratio(F, r.c, maximizer);

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Mat v = rng.gaussian(B, B);
    for (Index i = 0; i < B; ++i)
      for (Index j = 0; j < B; ++j) v(i, j) /= r.c[static_cast<std::size_t>(i)] * r.c[static_cast<std::size_t>(j)];
    r.max_random_ratio = std::max(r.max_random_ratio, rescaled_ratio(F, r.c, v));
  }
  r.samples = samples;
  return r;
}

Eigen::MatrixXd random_functional(int B, double max_entry, std::uint64_t seed) {
  if (B < 1 || max_entry < 0.0) throw Error("random_functional: invalid parameters");
  Rng rng(seed);
  Eigen::MatrixXd F(B, B);
  for (int j = 0; j < B; ++j)
    for (int i = 0; i < B; ++i) F(i, j) = rng.uniform(0.0, max_entry);
  return F;
}

}  // namespace fock
