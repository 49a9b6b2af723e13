#pragma once

#include <cstdint>
#include <random>

#include "waring/poly.hpp"

namespace waring {

/// Mixes a seed with a stream tag (splitmix64 finalizer). Used to derive
/// independent, reproducible sub-streams such as retry attempts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded source of standard complex Gaussians, (a + ib) / sqrt(2) with a, b
/// independent standard normals.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : engine_(seed) {}
  Complex operator()();
  CVector vector(int size);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

HomogeneousForm random_form(int n, int d, std::uint64_t seed);
LinearForm random_linear_form(int n, std::uint64_t seed);

/// h-term decomposition with Gaussian coordinates and weights; resampled
/// until the decomposition invariants hold. Requires h <= C(n+d, d).
Decomposition random_decomposition(int n, int d, int h, std::uint64_t seed,
                                   const Tolerances& tol = kDefaultTolerances);

/// Haar-like random unitary matrix (QR of a Gaussian matrix, phases fixed).
CMatrix random_unitary(int size, std::uint64_t seed);

}  // namespace waring
