#include "fockbench/interacting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fockbench/random.hpp"

namespace fock {

Mat InteractingSpace::creator(int n, const Vec& x) const {
  if (n < 0 || n >= N()) throw Error("InteractingSpace::creator: level out of range");
  if (x.size() != d()) throw Error("InteractingSpace::creator: dimension mismatch");
  const auto& blocks = creators[static_cast<std::size_t>(n)];
  Mat out = Mat::Zero(ranks[static_cast<std::size_t>(n + 1)], ranks[static_cast<std::size_t>(n)]);
  for (int i = 0; i < d(); ++i)
    if (x(i) != cplx(0.0)) out += x(i) * blocks[static_cast<std::size_t>(i)];
  return out;
}

std::vector<Index> InteractingSpace::offsets() const {
  std::vector<Index> off(ranks.size() + 1, 0);
  for (std::size_t n = 0; n < ranks.size(); ++n) off[n + 1] = off[n] + ranks[n];
  return off;
}

Index InteractingSpace::total_dim() const { return offsets().back(); }

Mat InteractingSpace::creator_operator(const Vec& x) const {
  const auto off = offsets();
  Mat op = Mat::Zero(off.back(), off.back());
  for (int n = 0; n < N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    op.block(off[un + 1], off[un], ranks[un + 1], ranks[un]) = creator(n, x);
  }
  return op;
}

namespace {

// Fills ranks, L, λ and creators from Λ and ξ.
void complete(InteractingSpace& s, const BuildOptions& opts) {
  const int d = s.d();
  const int N = s.N();
  s.ranks.clear();
  s.L.clear();
  s.lambda.clear();
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    s.ranks.push_back(s.Lambda[un].rows());
    s.L.push_back(s.Lambda[un].adjoint() * s.Lambda[un]);
    s.lambda.push_back(s.xi[un] * s.Lambda[un]);
  }
  s.creators.assign(static_cast<std::size_t>(N), {});
  s.well_definedness_residual = 0.0;
  for (int n = 0; n < N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Index dn = s.space.dim(n);
    const Mat& next = s.Lambda[un + 1];
    const Mat right_inverse = pinv(s.Lambda[un], opts.rank_tol);
    const double scale = next.norm();
    for (int i = 0; i < d; ++i) {
      // Λ_{n+1}(e_i ⊗ id) is the i-th column block of Λ_{n+1}.
      const Mat shifted = next.middleCols(i * dn, dn);
      Mat a = shifted * right_inverse;
      const double res = (a * s.Lambda[un] - shifted).norm();
      s.well_definedness_residual = std::max(s.well_definedness_residual, scale > 0.0 ? res / scale : res);
      s.creators[un].push_back(std::move(a));
    }
  }
  if (s.well_definedness_residual > opts.residual_tol)
    throw Error("interacting space: creators not well defined (residual " +
                std::to_string(s.well_definedness_residual) + "); the kernel condition fails");
}

}  // namespace

InteractingSpace build(const DeformationFamily& family, const BuildOptions& opts) {
  InteractingSpace s;
  s.space = family.space;
  for (int n = 0; n <= family.space.N(); ++n) {
    const Mat& l = family.L[static_cast<std::size_t>(n)];
    if (hermitian_defect(l) > 1e-8) throw Error("build: L_" + std::to_string(n) + " is not Hermitian");
    if (n == 0) {
      if (l.rows() != 1 || std::abs(l(0, 0) - cplx(1.0)) > 1e-14) throw Error("build: L_0 must be [1]");
      s.Lambda.push_back(identity(1));
      s.xi.push_back(identity(1));
      continue;
    }
    const auto split = split_hermitian(0.5 * (l + l.adjoint()), opts.rank_tol);
    if (split.min_value < -opts.psd_tol * std::max(split.max_value, 0.0))
      throw Error("build: L_" + std::to_string(n) + " is not positive semidefinite");
    const Index r = split.kept_values.size();
    RealVec root(r);
    for (Index k = 0; k < r; ++k) root(k) = std::sqrt(split.kept_values(k));
    s.xi.push_back(split.kept_vectors);
    s.Lambda.push_back(root.asDiagonal() * split.kept_vectors.adjoint());
  }
  complete(s, opts);
  return s;
}

InteractingSpace from_embedding(const TruncatedFockSpace& space, std::vector<Mat> lambda,
                                const BuildOptions& opts) {
  if (static_cast<int>(lambda.size()) != space.N() + 1)
    throw Error("from_embedding: expected N + 1 levels");
  InteractingSpace s;
  s.space = space;
  for (int n = 0; n <= space.N(); ++n) {
    const Mat& l = lambda[static_cast<std::size_t>(n)];
    if (l.rows() != space.dim(n) || l.cols() != space.dim(n))
      throw Error("from_embedding: level " + std::to_string(n) + " has wrong shape");
    if (n == 0) {
      if (std::abs(l(0, 0) - cplx(1.0)) > 1e-12) throw Error("from_embedding: λ_0 must be [1]");
      s.Lambda.push_back(identity(1));
      s.xi.push_back(identity(1));
      continue;
    }
    Mat basis = range_basis(l, opts.rank_tol);
    s.Lambda.push_back(basis.adjoint() * l);
    s.xi.push_back(std::move(basis));
  }
  complete(s, opts);
  return s;
}

InteractingSpace from_parts(const TruncatedFockSpace& space, std::vector<Mat> Lambda,
                            std::vector<Mat> xi, const BuildOptions& opts) {
  if (static_cast<int>(Lambda.size()) != space.N() + 1 || xi.size() != Lambda.size())
    throw Error("from_parts: expected N + 1 levels");
  for (int n = 0; n <= space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (Lambda[un].cols() != space.dim(n) || xi[un].rows() != space.dim(n) ||
        xi[un].cols() != Lambda[un].rows())
      throw Error("from_parts: level " + std::to_string(n) + " has inconsistent shapes");
  }
  InteractingSpace s;
  s.space = space;
  s.Lambda = std::move(Lambda);
  s.xi = std::move(xi);
  complete(s, opts);
  return s;
}

Squeezing squeezing_of(const InteractingSpace& space) {
  Squeezing k;
  k.kappa.push_back(identity(1));
  for (int n = 0; n < space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    // λ_n^+ = Λ_n^+ ξ_n*  (ξ isometric, Λ surjective)
    const Mat lambda_pinv = pinv(space.Lambda[un]) * space.xi[un].adjoint();
    k.kappa.push_back(space.lambda[un + 1] * lift_left(lambda_pinv, space.d(), 1));
  }
  return k;
}

std::vector<Mat> lambda_from_squeezing(const Squeezing& kappa, int d) {
  if (kappa.kappa.empty()) throw Error("lambda_from_squeezing: empty squeezing");
  std::vector<Mat> lambda{identity(1)};
  for (std::size_t n = 1; n < kappa.kappa.size(); ++n) {
    const Mat lifted = lift_left(lambda.back(), d, 1);
    if (kappa.kappa[n].cols() != lifted.rows() || kappa.kappa[n].rows() != lifted.rows())
      throw Error("lambda_from_squeezing: κ_" + std::to_string(n) + " has wrong shape");
    lambda.push_back(kappa.kappa[n] * lifted);
  }
  return lambda;
}

namespace {

double relative_norm(const Mat& part, const Mat& whole) {
  const double scale = whole.norm();
  return scale > 0.0 ? part.norm() / scale : part.norm();
}

SqueezingCheck check_against_flag(const Squeezing& kappa, const std::vector<Mat>& projections, int d) {
  SqueezingCheck c;
  for (std::size_t n = 1; n < kappa.kappa.size(); ++n) {
    const Mat& k = kappa.kappa[n];
    const Mat& below = projections[n - 1];
    const Mat complement_below = identity(below.rows()) - below;
    c.vanishing_residual = std::max(c.vanishing_residual, relative_norm(k * lift_left(complement_below, d, 1), k));
    const Mat& here = projections[n];
    c.range_residual = std::max(c.range_residual, relative_norm((identity(here.rows()) - here) * k, k));
  }
  return c;
}

}  // namespace

SqueezingCheck check_squeezing(const Squeezing& kappa, int d, double rank_tol) {
  std::vector<Mat> projections{identity(1)};
  std::vector<Index> ranks{1};
  for (std::size_t n = 1; n < kappa.kappa.size(); ++n) {
    const Mat& k = kappa.kappa[n];
    const Mat generated = k * lift_left(projections.back(), d, 1);
    const Mat basis = range_basis(generated, rank_tol);
    ranks.push_back(basis.cols());
    projections.push_back(projector(basis, k.rows()));
  }
  auto c = check_against_flag(kappa, projections, d);
  c.flag_ranks = std::move(ranks);
  return c;
}

SqueezingCheck check_squeezing_for(const InteractingSpace& space, const Squeezing& kappa, double rank_tol) {
  std::vector<Mat> projections;
  for (int n = 0; n <= space.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    projections.push_back(projector(space.xi[un], space.space.dim(n)));
  }
  auto c = check_against_flag(kappa, projections, space.d());
  for (std::size_t n = 0; n < kappa.kappa.size(); ++n) c.flag_ranks.push_back(numerical_rank(kappa.kappa[n], rank_tol));
  return c;
}

InteractingSpace space_from_squeezing(const Squeezing& kappa, const TruncatedFockSpace& space,
                                      const BuildOptions& opts) {
  if (static_cast<int>(kappa.kappa.size()) != space.N() + 1)
    throw Error("space_from_squeezing: expected N + 1 levels");
  const auto check = check_squeezing(kappa, space.d(), opts.rank_tol);
  if (!check.ok(opts.residual_tol))
    throw Error("space_from_squeezing: not a squeezing (vanishing residual " +
                std::to_string(check.vanishing_residual) + ", range residual " +
                std::to_string(check.range_residual) + ")");
  return from_embedding(space, lambda_from_squeezing(kappa, space.d()), opts);
}

DeformationFamily random_poi_family(int d, int N, const std::vector<Index>& ranks, std::uint64_t seed) {
  TruncatedFockSpace space(d, N);
  if (static_cast<int>(ranks.size()) != N + 1) throw Error("random_poi_family: need N + 1 ranks");
  if (ranks[0] != 1) throw Error("random_poi_family: r_0 must be 1");
  for (int n = 0; n < N; ++n) {
    const Index r = ranks[static_cast<std::size_t>(n)];
    const Index next = ranks[static_cast<std::size_t>(n + 1)];
    if (next < 0 || next > d * r || next > space.dim(n + 1))
      throw Error("random_poi_family: infeasible rank profile at level " + std::to_string(n + 1) +
                  " (H_n = 0 forces H_{n+1} = 0; r_{n+1} <= d r_n)");
  }
  Rng rng(seed);
  std::vector<Mat> Lambda{identity(1)};
  for (int n = 0; n < N; ++n) {
    const Index r = ranks[static_cast<std::size_t>(n)];
    const Index next = ranks[static_cast<std::size_t>(n + 1)];
    Mat g = rng.gaussian(next, d * r);
    // Gaussian matrices have full row rank almost surely; check anyway.
    if (numerical_rank(g) != next) throw Error("random_poi_family: degenerate draw");
    Lambda.push_back(g * lift_left(Lambda.back(), d, 1));
  }
  std::vector<Mat> L;
  for (const auto& lam : Lambda) L.push_back(lam.adjoint() * lam);
  L[0] = identity(1);
  return make_family(space, std::move(L));
}

WordImage apply_word(const Word& word, const InteractingSpace& space) {
  WordImage img;
  img.level = 0;
  img.coords = Vec::Ones(1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->creator) {
      if (img.level >= space.N()) throw Error("apply_word: word exceeds the truncation");
      img.coords = space.creator(img.level, it->x) * img.coords;
      ++img.level;
    } else {
      if (img.level == 0) {
        img.coords = Vec();
        img.level = -1;
        return img;
      }
      img.coords = space.creator(img.level - 1, it->x).adjoint() * img.coords;
      --img.level;
    }
  }
  return img;
}

cplx vacuum_expectation(const Word& word, const InteractingSpace& space) {
  const auto img = apply_word(word, space);
  if (img.level != 0) return 0.0;
  return img.coords(0);
}

Word adjoint_word(const Word& word) {
  Word out(word.rbegin(), word.rend());
  for (auto& l : out) l.creator = !l.creator;
  return out;
}

double SpaceResiduals::max_residual() const {
  return std::max({gram, isometry, embedding, well_definedness, intertwining, lambda_recursion});
}

SpaceResiduals verify(const InteractingSpace& s, double rank_tol) {
  SpaceResiduals r;
  const int d = s.d();
  r.vacuum_ok = !s.ranks.empty() && s.ranks[0] == 1 && std::abs(std::abs(s.Lambda[0](0, 0)) - 1.0) < 1e-14;
  for (int n = 0; n <= s.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    r.gram = std::max(r.gram, rel_diff(s.Lambda[un].adjoint() * s.Lambda[un], s.L[un]));
    r.isometry = std::max(r.isometry, (s.xi[un].adjoint() * s.xi[un] - identity(s.ranks[un])).norm());
    r.embedding = std::max(r.embedding, rel_diff(s.xi[un] * s.Lambda[un], s.lambda[un]));
  }
  const auto kappa = squeezing_of(s);
  for (int n = 0; n < s.N(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Index dn = s.space.dim(n);
    const double scale = s.Lambda[un + 1].norm();
    Mat stacked(s.ranks[un + 1], d * s.ranks[un]);
    for (int i = 0; i < d; ++i) {
      const Mat& a = s.creators[un][static_cast<std::size_t>(i)];
      const Mat shifted = s.Lambda[un + 1].middleCols(i * dn, dn);
      const double res = (a * s.Lambda[un] - shifted).norm();
      r.well_definedness = std::max(r.well_definedness, scale > 0.0 ? res / scale : res);
      r.intertwining = std::max(
          r.intertwining, rel_diff(s.xi[un + 1] * a * s.xi[un].adjoint(), kappa.kappa[un + 1] * creator_block(unit_vector(d, i), d, n)));
      stacked.middleCols(i * s.ranks[un], s.ranks[un]) = a;
    }
    if (numerical_rank(stacked, rank_tol) != s.ranks[un + 1]) r.spanning_ok = false;
  }
  const auto rebuilt = lambda_from_squeezing(kappa, d);
  for (int n = 0; n <= s.N(); ++n)
    r.lambda_recursion = std::max(r.lambda_recursion, rel_diff(rebuilt[static_cast<std::size_t>(n)], s.lambda[static_cast<std::size_t>(n)]));
  return r;
}

}  // namespace fock
