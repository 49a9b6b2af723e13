#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

/// A point of VSP(F, h) together with the parameter that produced it.
struct VspSample {
  std::string method;
  CVector parameter;
  Decomposition decomposition;
  double residual = 0.0;
};

struct PencilResult {
  CVector eigenvalues;                 // roots of det(mu A_F - A_G)
  std::vector<ProjectivePoint> vertices;  // vertices of the singular members of the pencil
  Decomposition decomposition;
  double residual = 0.0;
};

/// Decompositions of one form; consecutive entries share the term recorded in
/// links[k] = (index in sequence[k], index in sequence[k+1]).
struct ChainCertificate {
  std::vector<Decomposition> sequence;
  std::vector<std::pair<int, int>> links;
};

struct WeightSolution {
  CVector weights;
  double residual = 0.0;
  int rank = 0;
  bool rank_deficient = false;
};

/// Least-squares weights for F = sum lambda_i L_i^d.
WeightSolution solve_weights(const HomogeneousForm& f, const std::vector<LinearForm>& forms,
                             const Tolerances& tol = kDefaultTolerances);

/// Solves the weights and packages a checked decomposition of F. Throws
/// Rejected when the system is rank deficient, a weight vanishes, the residual
/// exceeds tol.residual, or the terms violate the decomposition invariants.
Decomposition decomposition_from_forms(const HomogeneousForm& f, const std::vector<LinearForm>& forms,
                                       const Tolerances& tol = kDefaultTolerances);

// --- binary forms -----------------------------------------------------------

/// Dimension of the parameter space of sylvester_parametrize: 2h - d.
int sylvester_parameter_count(int d, int h);

/// Decomposition of a general binary form of degree d with h <= d <= 2h - 1
/// terms: u picks phi = sum u_j k_j in the canonical orthonormal basis of
/// AP_h(F); the roots of phi are the linear forms.
VspSample sylvester_parametrize(const HomogeneousForm& f, int h, const CVector& u,
                                const Tolerances& tol = kDefaultTolerances);

// --- quadrics ---------------------------------------------------------------

/// Symmetric matrix A with F(x) = x^T A x.
CMatrix quadric_matrix(const HomogeneousForm& f);

/// Simultaneous diagonalization of the pencil spanned by F and G. The linear
/// forms are the rows of the inverse eigenvector matrix of A_F^{-1} A_G.
PencilResult quadric_pencil_decompose(const HomogeneousForm& f, const HomogeneousForm& g,
                                      const Tolerances& tol = kDefaultTolerances);

/// h-term decomposition: extra_terms plus the pencil decomposition of
/// F - sum extra_terms. Requires h > n + 1 and h - (n+1) extra terms.
VspSample quadric_sample_vsp(const HomogeneousForm& f, int h, const std::vector<Term>& extra_terms,
                             const HomogeneousForm& g, const Tolerances& tol = kDefaultTolerances);

/// A 3-plane of P^5 given by two linear functionals on conic coefficient
/// vectors: the plane is {v : h1^T v = h2^T v = 0}.
struct ConicPlane {
  CVector h1;
  CVector h2;
};

/// Four-term decomposition of a plane conic cut out by a 3-plane through [F].
VspSample conic_vsp4_sample(const HomogeneousForm& f, const ConicPlane& plane,
                            const Tolerances& tol = kDefaultTolerances);

/// The 3-plane spanned by the squares of a four-term conic decomposition.
ConicPlane conic_plane_of(const Decomposition& dec, const Tolerances& tol = kDefaultTolerances);

/// A seeded random 3-plane through [F].
ConicPlane random_conic_plane(const HomogeneousForm& f, std::uint64_t seed);

// --- plane cubics -----------------------------------------------------------

/// Four-term decomposition of a general plane cubic. u in P^2 selects the
/// 3-plane spanned by the first partials and the lift of u to the canonical
/// orthonormal complement of their span; the plane meets the Veronese surface
/// of conics in the four squares L_i^2.
VspSample plane_cubic_vsp4(const HomogeneousForm& f, const CVector& u, const Tolerances& tol = kDefaultTolerances);

/// Inverse of plane_cubic_vsp4: the parameter u of a four-term decomposition.
CVector plane_cubic_parameter(const HomogeneousForm& f, const Decomposition& dec,
                              const Tolerances& tol = kDefaultTolerances);

// --- seeded samplers (resample degenerate parameters up to 16 times) --------

inline constexpr int kRetryBudget = 16;

VspSample sample_sylvester(const HomogeneousForm& f, int h, std::uint64_t seed,
                           const Tolerances& tol = kDefaultTolerances);
PencilResult sample_pencil(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol = kDefaultTolerances);
/// h = n + 1 uses the pencil; larger h adds seeded extra terms.
VspSample sample_quadric(const HomogeneousForm& f, int h, std::uint64_t seed,
                         const Tolerances& tol = kDefaultTolerances);
VspSample sample_conic(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol = kDefaultTolerances);
VspSample sample_plane_cubic(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol = kDefaultTolerances);

// --- chains -----------------------------------------------------------------

/// Parameters for the (h-1)-term solver used by chain_step. Missing entries
/// are drawn from seed.
struct ChainParams {
  std::uint64_t seed = 0;
  std::optional<CVector> u;                  // binary forms and plane cubics
  std::optional<HomogeneousForm> pencil;     // quadrics
  std::optional<std::vector<Term>> extra_terms;  // quadrics with h - 1 > n + 1
};

/// Is there a solver for (n, d, h)?  Binary forms with h <= d <= 2h-1,
/// quadrics with h >= n+1, plane cubics with h = 4.
bool has_solver(int n, int d, int h);

/// Keeps term keep_index of dec and re-decomposes the remainder with h-1 terms.
Decomposition chain_step(const HomogeneousForm& f, const Decomposition& dec, int keep_index,
                         const ChainParams& params, const Tolerances& tol = kDefaultTolerances);

/// Chain of length at most three between two h-term decompositions of a
/// quadric (h >= n + 3).
ChainCertificate chain_connect(const HomogeneousForm& f, const Decomposition& a, const Decomposition& b,
                               std::uint64_t seed = 0, const Tolerances& tol = kDefaultTolerances);

struct ChainCheck {
  bool ok = false;
  double max_residual = 0.0;
  double max_link_gap = 0.0;
  std::string problem;
};
ChainCheck verify_chain(const HomogeneousForm& f, const ChainCertificate& cert,
                        const Tolerances& tol = kDefaultTolerances);

// --- dimension --------------------------------------------------------------

/// h(n+1) minus the rank of the differential of (M_1..M_h) |-> sum M_i^d at
/// M_i = lambda_i^{1/d} L_i: the local dimension of VSP(F, h) at dec.
int tangent_dimension(const HomogeneousForm& f, const Decomposition& dec, const Tolerances& tol = kDefaultTolerances);

}  // namespace waring
