#include "waring/apolarity.hpp"

#include <algorithm>
#include <limits>

#include "waring/linalg.hpp"

namespace waring {

HomogeneousForm apolar_pairing(const HomogeneousForm& phi, const HomogeneousForm& f) {
  require(phi.num_vars() == f.num_vars(), "apolar_pairing: forms have different numbers of variables");
  if (phi.degree() > f.degree())
    fail(ErrorKind::InvalidArgument, "apolar_pairing: operator degree exceeds the form degree");
  const int n = f.n();
  const auto dual = monomial_basis(n, phi.degree());
  const auto primal = monomial_basis(n, f.degree());
  HomogeneousForm out(f.num_vars(), f.degree() - phi.degree());
  CVector c = CVector::Zero(out.coeffs().size());
  for (size_t b = 0; b < dual.size(); ++b) {
    const Complex pb = phi.coeffs()(static_cast<Eigen::Index>(b));
    if (pb == Complex(0.0)) continue;
    for (size_t a = 0; a < primal.size(); ++a) {
      if (!dual[b].divides(primal[a])) continue;
      const Complex fa = f.coeffs()(static_cast<Eigen::Index>(a));
      if (fa == Complex(0.0)) continue;
      c(monomial_index(primal[a] - dual[b])) += pb * fa * falling_factorial(primal[a], dual[b]);
    }
  }
  return {f.num_vars(), f.degree() - phi.degree(), c};
}

CatalecticantMatrix catalecticant(const HomogeneousForm& f, int t) {
  require(t >= 0 && t <= f.degree(), "catalecticant needs 0 <= t <= d");
  CatalecticantMatrix m;
  m.n = f.n();
  m.t = t;
  m.d = f.degree();
  m.rows = monomial_basis(m.n, m.d - t);
  m.cols = monomial_basis(m.n, t);
  m.entries = CMatrix::Zero(static_cast<Eigen::Index>(m.rows.size()), static_cast<Eigen::Index>(m.cols.size()));
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.cols.size(); ++j) {
      const ExponentVector sum = m.rows[i] + m.cols[j];
      m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          f.coeff(sum) * falling_factorial(sum, m.cols[j]);
    }
  return m;
}

ApolarBasis apolar_space(const HomogeneousForm& f, int t, const Tolerances& tol) {
  const CatalecticantMatrix cat = catalecticant(f, t);
  return {t, f.n(), linalg::null_space(cat.entries, tol.rank)};
}

CMatrix evaluation_matrix(const std::vector<CVector>& points, int t) {
  require(!points.empty(), "evaluation_matrix needs at least one point");
  const int nv = static_cast<int>(points.front().size());
  const auto basis = monomial_basis(nv - 1, t);
  CMatrix m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < points.size(); ++i) {
    require(points[i].size() == nv, "points have different dimensions");
    for (size_t k = 0; k < basis.size(); ++k) {
      Complex v = 1.0;
      for (int j = 0; j < nv; ++j)
        for (int e = 0; e < basis[k][j]; ++e) v *= points[i](j);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v;
    }
  }
  return m;
}

CMatrix vanishing_forms(const std::vector<CVector>& points, int t, const Tolerances& tol) {
  require(t >= 1, "vanishing_forms needs t >= 1");
  CMatrix eval = evaluation_matrix(points, t);
  // Rows are scaled to unit norm so that the rank decision is independent of
  // the representatives chosen for the projective points.
  for (Eigen::Index i = 0; i < eval.rows(); ++i) eval.row(i) /= eval.row(i).norm();
  return linalg::null_space(eval, tol.rank);
}

namespace {

double inclusion_defect(const std::vector<CVector>& points, const CMatrix& apolar, int d, const Tolerances& tol) {
  if (points.empty()) {
    // L_d of no points is the whole space.
    return linalg::max_projection_residual(CMatrix::Identity(apolar.rows(), apolar.rows()), apolar);
  }
  return linalg::max_projection_residual(vanishing_forms(points, d, tol), apolar);
}

}  // namespace

PolyhedronCertificate is_polar_polyhedron(const HomogeneousForm& f, const std::vector<LinearForm>& points,
                                          const Tolerances& tol) {
  if (points.empty()) fail(ErrorKind::InvalidArgument, "is_polar_polyhedron needs at least one point");
  std::vector<CVector> pts;
  for (const auto& l : points) {
    require(l.num_vars() == f.num_vars(), "point dimension does not match the form");
    pts.push_back(l.normalized(tol.pivot).coords());
  }
  const int d = f.degree();
  const ApolarBasis ap = apolar_space(f, d, tol);

  PolyhedronCertificate cert;
  cert.inclusion_defect = inclusion_defect(pts, ap.basis, d, tol);
  cert.minimality_margin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<CVector> rest;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    const double defect = inclusion_defect(rest, ap.basis, d, tol);
    cert.minimality_margin = std::min(cert.minimality_margin, defect);
    if (defect <= tol.inclusion && !cert.minimality_witness) cert.minimality_witness = static_cast<int>(i);
  }
  cert.verdict = cert.inclusion_defect <= tol.inclusion && !cert.minimality_witness;
  return cert;
}

}  // namespace waring
