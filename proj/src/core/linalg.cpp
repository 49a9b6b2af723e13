#include "waring/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace waring::linalg {

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

int numerical_rank(const CMatrix& m, double rel_tol) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

int column_normalized_rank(const CMatrix& m, double rel_tol) {
  CMatrix scaled(m.rows(), m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double nrm = m.col(j).norm();
    if (nrm > 0.0) scaled.col(k++) = m.col(j) / nrm;
  }
  return numerical_rank(scaled.leftCols(k), rel_tol);
}

CMatrix canonical_basis_from_projector(const CMatrix& projector, int dim) {
  const Eigen::Index n = projector.rows();
  CMatrix basis(n, dim);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int k = 0; k < dim; ++k) {
    // Residuals of the remaining projected unit vectors against the chosen ones.
    std::vector<CVector> cand(static_cast<size_t>(n));
    std::vector<double> norms(static_cast<size_t>(n), -1.0);
    double best = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      CVector v = projector.col(j);
      for (int i = 0; i < k; ++i) v -= basis.col(i) * basis.col(i).dot(v);
      // One reorthogonalization pass.
      for (int i = 0; i < k; ++i) v -= basis.col(i) * basis.col(i).dot(v);
      norms[static_cast<size_t>(j)] = v.norm();
      best = std::max(best, v.norm());
      cand[static_cast<size_t>(j)] = std::move(v);
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nj = norms[static_cast<size_t>(j)];
      if (nj >= 0.0 && nj >= 0.5 * best && nj > 0.0) {
        basis.col(k) = cand[static_cast<size_t>(j)] / nj;
        used[static_cast<size_t>(j)] = true;
        break;
      }
    }
  }
  return basis;
}

CMatrix null_space(const CMatrix& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (cols == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd s = svd.singularValues();
  int r = 0;
  if (s.size() > 0 && s(0) > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rel_tol * s(0)) ++r;
  const int k = static_cast<int>(cols) - r;
  if (k == 0) return CMatrix(cols, 0);
  const CMatrix kernel = svd.matrixV().rightCols(k);
  const CMatrix projector = kernel * kernel.adjoint();
  return canonical_basis_from_projector(projector, k);
}

CMatrix orthogonal_complement(const CMatrix& m, double rel_tol) {
  return null_space(m.adjoint(), rel_tol);
}

double max_projection_residual(const CMatrix& vs, const CMatrix& basis) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vs.cols(); ++j) {
    CVector v = vs.col(j);
    if (basis.cols() > 0) v -= basis * (basis.adjoint() * v);
    worst = std::max(worst, v.norm());
  }
  return worst;
}

double chordal_distance(const CVector& a, const CVector& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  // |a|^2|b|^2 - |<a,b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2, which avoids
  // cancellation for nearly parallel vectors.
  double wedge = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = i + 1; j < a.size(); ++j) wedge += std::norm(a(i) * b(j) - a(j) * b(i));
  return std::sqrt(wedge / (na * nb));
}

}  // namespace waring::linalg
