#pragma once

#include <cstdint>
#include <random>

#include "fockbench/linalg.hpp"

namespace fock {

/// Seeded source of complex Gaussian matrices; the same seed gives the same
/// stream on a given standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Mat gaussian(Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = cplx(normal(), normal());
    return m;
  }

  Vec gaussian_vector(Index n) { return gaussian(n, 1).col(0); }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fock
