#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace waring {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Numerical thresholds shared by every routine. Defaults are the library's
/// documented values; callers may override per call.
struct Tolerances {
  /// Singular values below rank * (largest singular value) count as zero.
  double rank = 1e-10;
  /// Accepted relative residual ||F - synthesize(dec)|| / ||F||.
  double residual = 1e-8;
  /// Largest projection residual accepted for L_d(points) inside AP_d(F).
  double inclusion = 1e-8;
  /// Minimal chordal separation for roots, eigenvalues and points.
  double distinct = 1e-8;
  /// Relative magnitude below which a coordinate counts as zero when picking
  /// the projective normalization pivot.
  double pivot = 1e-12;
  /// Relative magnitude below which a weighted term counts as vanishing.
  double weight = 1e-10;
};

inline const Tolerances kDefaultTolerances{};

enum class ErrorKind {
  InvalidArgument,  // malformed input, bad indices, shape mismatch
  Precondition,     // input violates a documented precondition (not general, wrong degree)
  Rejected,         // degenerate sample: repeated roots, collisions, zero weights
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace waring
