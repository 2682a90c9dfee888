#include "fockbench/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace fock {

std::int64_t level_cap() {
  if (const char* env = std::getenv("FOCKBENCH_LEVEL_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultLevelCap;
}

TruncatedFockSpace::TruncatedFockSpace(int d, int N) : TruncatedFockSpace(d, N, level_cap()) {}

TruncatedFockSpace::TruncatedFockSpace(int d, int N, std::int64_t cap) : d_(d), N_(N) {
  if (d < 1) throw Error("TruncatedFockSpace: d must be positive");
  if (N < 0) throw Error("TruncatedFockSpace: N must be nonnegative");
  std::int64_t top = 1;
  for (int n = 0; n < N; ++n) {
    top *= d;
    if (top > cap)
      throw Error("TruncatedFockSpace: d^N = " + std::to_string(d) + "^" + std::to_string(N) +
                  " exceeds level cap " + std::to_string(cap));
  }
}

Index TruncatedFockSpace::dim(int n) const {
  if (n < 0 || n > N_) throw Error("TruncatedFockSpace::dim: level out of range");
  Index out = 1;
  for (int k = 0; k < n; ++k) out *= d_;
  return out;
}

Index TruncatedFockSpace::total_dim() const {
  Index total = 0;
  for (int n = 0; n <= N_; ++n) total += dim(n);
  return total;
}

std::size_t encode_index(std::span<const int> multi_index, int d) {
  std::size_t flat = 0;
  for (int i : multi_index) {
    if (i < 0 || i >= d) throw Error("encode_index: entry out of range");
    flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
  }
  return flat;
}

std::vector<int> decode_index(std::size_t flat, int n, int d) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(d));
    flat /= static_cast<std::size_t>(d);
  }
  if (flat != 0) throw Error("decode_index: flat index out of range");
  return out;
}

GradedVector GradedVector::zero(const TruncatedFockSpace& space) {
  GradedVector v;
  for (int n = 0; n <= space.N(); ++n) v.levels.push_back(Vec::Zero(space.dim(n)));
  return v;
}

GradedVector GradedVector::vacuum(const TruncatedFockSpace& space) {
  GradedVector v = zero(space);
  v.levels[0](0) = 1.0;
  return v;
}

double GradedVector::squared_norm() const {
  double s = 0.0;
  for (const auto& x : levels) s += x.squaredNorm();
  return s;
}

double GradedVector::norm() const { return std::sqrt(squared_norm()); }

cplx GradedVector::inner(const GradedVector& other) const {
  if (levels.size() != other.levels.size()) throw Error("GradedVector::inner: level mismatch");
  cplx s = 0.0;
  for (std::size_t n = 0; n < levels.size(); ++n) s += levels[n].dot(other.levels[n]);
  return s;
}

bool GradedOperator::has_block(int source_level) const {
  const int k = source_level - first_level;
  return k >= 0 && k < static_cast<int>(blocks.size());
}

const Mat& GradedOperator::block(int source_level) const {
  if (!has_block(source_level)) throw Error("GradedOperator::block: no block at this level");
  return blocks[static_cast<std::size_t>(source_level - first_level)];
}

GradedVector GradedOperator::apply(const GradedVector& x) const {
  GradedVector y;
  y.levels.reserve(x.levels.size());
  for (const auto& lv : x.levels) y.levels.push_back(Vec::Zero(lv.size()));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int src = first_level + static_cast<int>(k);
    const int dst = src + degree;
    if (src < 0 || dst < 0 || src >= static_cast<int>(x.levels.size()) ||
        dst >= static_cast<int>(x.levels.size()))
      throw Error("GradedOperator::apply: operator and vector have different cutoffs");
    y.levels[static_cast<std::size_t>(dst)] += blocks[k] * x.levels[static_cast<std::size_t>(src)];
  }
  return y;
}

GradedOperator GradedOperator::adjoint() const {
  GradedOperator out;
  out.degree = -degree;
  out.first_level = first_level + degree;
  for (const auto& b : blocks) out.blocks.push_back(b.adjoint());
  return out;
}

Mat lift_left(const Mat& m, int d, int k) {
  Index id_dim = 1;
  for (int j = 0; j < k; ++j) id_dim *= d;
  return kron(identity(id_dim), m);
}

Mat lift_right(const Mat& m, int d, int k) {
  Index id_dim = 1;
  for (int j = 0; j < k; ++j) id_dim *= d;
  return kron(m, identity(id_dim));
}

Mat creator_block(const Vec& x, int d, int n) {
  if (x.size() != d) throw Error("creator_block: vector has wrong dimension");
  return lift_right(Mat(x), d, n);
}

GradedOperator left_creator(const Vec& x, const TruncatedFockSpace& space) {
  if (x.size() != space.d()) throw Error("left_creator: dimension mismatch");
  GradedOperator op;
  op.degree = 1;
  op.first_level = 0;
  for (int n = 0; n < space.N(); ++n) op.blocks.push_back(creator_block(x, space.d(), n));
  return op;
}

GradedOperator left_annihilator(const Vec& x, const TruncatedFockSpace& space) {
  return left_creator(x, space).adjoint();
}

GradedOperator right_creator(const Vec& x, const TruncatedFockSpace& space) {
  if (x.size() != space.d()) throw Error("right_creator: dimension mismatch");
  GradedOperator op;
  op.degree = 1;
  op.first_level = 0;
  Index dn = 1;
  for (int n = 0; n < space.N(); ++n) {
    op.blocks.push_back(kron(identity(dn), Mat(x)));
    dn *= space.d();
  }
  return op;
}

bool is_permutation(std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(s)]) return false;
    seen[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

int inversions(std::span<const int> sigma) {
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++count;
  return count;
}

int bubble_sort_swaps(std::span<const int> sigma) {
  std::vector<int> a(sigma.begin(), sigma.end());
  int swaps = 0;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t j = 0; j + 1 < a.size() - pass; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        ++swaps;
      }
  return swaps;
}

PermutationAction permutation_action(std::span<const int> sigma, int d) {
  if (!is_permutation(sigma)) throw Error("permutation_action: not a permutation");
  const int n = static_cast<int>(sigma.size());
  Index total = 1;
  for (int k = 0; k < n; ++k) total *= d;

  PermutationAction act;
  act.inversions = inversions(sigma);
  act.image.resize(static_cast<std::size_t>(total));
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Index j = 0; j < total; ++j) {
    const auto in = decode_index(static_cast<std::size_t>(j), n, d);
    // Position t (from the left) carries label n - t.
    for (int t = 0; t < n; ++t)
      out[static_cast<std::size_t>(t)] =
          in[static_cast<std::size_t>(n - 1 - sigma[static_cast<std::size_t>(n - 1 - t)])];
    act.image[static_cast<std::size_t>(j)] = static_cast<Index>(encode_index(out, d));
  }
  return act;
}

Mat permutation_operator(std::span<const int> sigma, const TruncatedFockSpace& space,
                         int* inversion_count) {
  if (static_cast<int>(sigma.size()) > space.N())
    throw Error("permutation_operator: more letters than the level cutoff");
  const auto act = permutation_action(sigma, space.d());
  const Index dim = static_cast<Index>(act.image.size());
  Mat p = Mat::Zero(dim, dim);
  for (Index j = 0; j < dim; ++j) p(act.image[static_cast<std::size_t>(j)], j) = 1.0;
  if (inversion_count) *inversion_count = act.inversions;
  return p;
}

}  // namespace fock
