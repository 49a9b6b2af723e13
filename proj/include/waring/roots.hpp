#pragma once

#include <vector>

#include "waring/types.hpp"

namespace waring {

/// Roots of sum_k c_k s^k (coefficients low to high) via the eigenvalues of the
/// companion matrix, each polished by Newton steps. The leading coefficient
/// must be nonzero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Roots of a binary form phi(xi_0, xi_1) of degree h given in the canonical
/// monomial order (xi_0^h, xi_0^{h-1} xi_1, ..., xi_1^h), as points [a_0 : a_1]
/// of P^1. A root at infinity [1 : 0] is detected when the xi_0^h coefficient
/// drops below rank_tol * max|c| and handled by lowering the degree.
/// Throws Rejected when two roots are closer than distinct_tol (chordal).
std::vector<CVector> binary_form_roots(const CVector& coeffs, const Tolerances& tol = kDefaultTolerances);

/// Symmetric 3x3 matrix S with x^T S x equal to the conic sum_alpha c_alpha x^alpha
/// (coefficients in the canonical order of degree-2 monomials in 3 variables).
Eigen::Matrix3cd conic_matrix(const CVector& coeffs);

/// The four common zeros in P^2 of two conics x^T S1 x = x^T S2 x = 0.
///
/// After a fixed pseudo-random unitary change of coordinates the variable x is
/// eliminated with the Sylvester resultant, giving a quartic in y. Its roots
/// are back-substituted through the linear combination of the two conics that
/// cancels x^2, and every point is refined by damped Newton steps on the
/// original pair. Throws Rejected unless four pairwise distinct points with
/// residual <= tol.residual are found.
std::vector<Eigen::Vector3cd> intersect_conics(const Eigen::Matrix3cd& s1, const Eigen::Matrix3cd& s2,
                                               const Tolerances& tol = kDefaultTolerances);

}  // namespace waring
