#pragma once

#include "waring/types.hpp"

namespace waring::linalg {

/// Singular values in non-increasing order.
Eigen::VectorXd singular_values(const CMatrix& m);

/// Number of singular values above rel_tol * sigma_max. Zero for an empty or
/// zero matrix.
int numerical_rank(const CMatrix& m, double rel_tol);

/// Same, with each column scaled to unit norm first (zero columns dropped).
int column_normalized_rank(const CMatrix& m, double rel_tol);

/// Orthonormal basis (as columns) of the numerical kernel of m.
///
/// The basis is canonical: it depends only on the kernel, not on the SVD's
/// arbitrary choice of singular vectors. Columns are obtained by projecting
/// the standard basis vectors onto the kernel, taking them greedily in index
/// order (the first whose residual is within a factor 2 of the best remaining
/// one) and orthonormalizing.
CMatrix null_space(const CMatrix& m, double rel_tol);

/// Canonical orthonormal basis of the Hermitian orthogonal complement of the
/// column span of m.
CMatrix orthogonal_complement(const CMatrix& m, double rel_tol);

/// Canonical orthonormal basis of the column span of an orthogonal projector.
CMatrix canonical_basis_from_projector(const CMatrix& projector, int dim);

/// Largest residual ||v - B B^* v|| over the columns v of vs, where the
/// columns of basis are orthonormal.
double max_projection_residual(const CMatrix& vs, const CMatrix& basis);

/// Chordal distance between two points of a projective space,
/// sqrt(1 - |<a,b>|^2 / (|a|^2 |b|^2)).
double chordal_distance(const CVector& a, const CVector& b);

}  // namespace waring::linalg
