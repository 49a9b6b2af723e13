#pragma once

#include <optional>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

/// Matrix of ap^t_F : k[xi]_t -> k[x]_{d-t}, phi |-> D_phi(F).
/// Rows follow monomial_basis(n, d - t), columns monomial_basis(n, t).
struct CatalecticantMatrix {
  int n = 0;
  int t = 0;
  int d = 0;
  std::vector<ExponentVector> rows;
  std::vector<ExponentVector> cols;
  CMatrix entries;
};

/// Orthonormal basis of AP_t(F); each column is the coefficient vector of a
/// degree-t form in the dual variables.
struct ApolarBasis {
  int t = 0;
  int n = 0;
  CMatrix basis;

  int dim() const { return static_cast<int>(basis.cols()); }
  HomogeneousForm element(int k) const { return {n + 1, t, basis.col(k)}; }
};

struct PolyhedronCertificate {
  bool verdict = false;
  /// Largest residual of a vanishing-form basis vector off AP_d(F).
  double inclusion_defect = 0.0;
  /// Smallest defect observed when deleting a single point; the minimality margin.
  double minimality_margin = 0.0;
  /// Index of a point whose deletion keeps the inclusion, when one exists.
  std::optional<int> minimality_witness;
};

/// D_phi(F): phi(d/dx_0, ..., d/dx_n) applied to F, degree d - t.
HomogeneousForm apolar_pairing(const HomogeneousForm& phi, const HomogeneousForm& f);

CatalecticantMatrix catalecticant(const HomogeneousForm& f, int t);

ApolarBasis apolar_space(const HomogeneousForm& f, int t, const Tolerances& tol = kDefaultTolerances);

/// Matrix whose row i evaluates the degree-t monomials of the dual variables at
/// points[i].
CMatrix evaluation_matrix(const std::vector<CVector>& points, int t);

/// Orthonormal basis (columns) of L_t(p_1, ..., p_h): degree-t dual forms
/// vanishing at every point.
CMatrix vanishing_forms(const std::vector<CVector>& points, int t, const Tolerances& tol = kDefaultTolerances);

/// The apolarity criterion for polar polyhedra: L_d(points) lies in AP_d(F)
/// and no point can be dropped without breaking the inclusion.
PolyhedronCertificate is_polar_polyhedron(const HomogeneousForm& f, const std::vector<LinearForm>& points,
                                          const Tolerances& tol = kDefaultTolerances);

}  // namespace waring
