#pragma once

#include <cstdint>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

struct SecantReport {
  int n = 0;
  int d = 0;
  int h = 0;
  std::uint64_t seed = 0;
  int expected_dim = 0;  // min(h(n+1) - 1, N)
  int computed_dim = 0;  // projective dimension of the span of tangent spaces
  bool defective = false;
  int vsp_dim_formula = 0;  // h(n+1) - C(n+d, d)
};

/// The n+1 forms x_i L^{d-1}; their span is the affine cone over the tangent
/// space of the Veronese variety at [L^d].
std::vector<HomogeneousForm> veronese_tangent_basis(const LinearForm& l, int d);

/// Columns: coefficient vectors of x_j L_i^{d-1} for every form and variable,
/// in Bombieri-scaled coordinates.
CMatrix tangent_span_matrix(const std::vector<LinearForm>& forms, int d);

/// Numerical rank of tangent_span_matrix with column normalization.
int tangent_span_rank(const std::vector<LinearForm>& forms, int d, const Tolerances& tol = kDefaultTolerances);

int expected_secant_dim(int n, int d, int h);

/// Terracini's lemma at h seeded random points of the Veronese variety V_{d,n}.
SecantReport terracini_dim(int n, int d, int h, std::uint64_t seed, const Tolerances& tol = kDefaultTolerances);

/// Runs terracini_dim for each seed; stable reports agree on computed_dim.
struct StableSecantReport {
  SecantReport report;  // the first seed's report
  std::vector<int> computed_dims;
  bool stable = false;
};
StableSecantReport terracini_dim_stable(int n, int d, int h, const std::vector<std::uint64_t>& seeds,
                                        const Tolerances& tol = kDefaultTolerances);

}  // namespace waring
