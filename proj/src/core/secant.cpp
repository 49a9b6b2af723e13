#include "waring/secant.hpp"

#include <algorithm>

#include "waring/linalg.hpp"
#include "waring/random.hpp"

namespace waring {

std::vector<HomogeneousForm> veronese_tangent_basis(const LinearForm& l, int d) {
  require(d >= 1, "veronese_tangent_basis needs d >= 1");
  const HomogeneousForm lower = power_form(l, d - 1);
  std::vector<HomogeneousForm> out;
  for (int i = 0; i < l.num_vars(); ++i) out.push_back(multiply_by_variable(lower, i));
  return out;
}

CMatrix tangent_span_matrix(const std::vector<LinearForm>& forms, int d) {
  require(!forms.empty(), "tangent_span_matrix needs at least one form");
  const int nv = forms.front().num_vars();
  CMatrix m(num_monomials(nv - 1, d), static_cast<Eigen::Index>(forms.size()) * nv);
  Eigen::Index col = 0;
  for (const auto& l : forms) {
    require(l.num_vars() == nv, "forms have different numbers of variables");
    for (const auto& g : veronese_tangent_basis(l, d)) m.col(col++) = g.scaled_coeffs();
  }
  return m;
}

int tangent_span_rank(const std::vector<LinearForm>& forms, int d, const Tolerances& tol) {
  return linalg::column_normalized_rank(tangent_span_matrix(forms, d), tol.rank);
}

int expected_secant_dim(int n, int d, int h) {
  require(h >= 1, "expected_secant_dim needs h >= 1");
  return std::min(h * (n + 1) - 1, num_monomials(n, d) - 1);
}

SecantReport terracini_dim(int n, int d, int h, std::uint64_t seed, const Tolerances& tol) {
  require(n >= 0 && d >= 1 && h >= 1, "terracini_dim needs n >= 0, d >= 1, h >= 1");
  std::vector<LinearForm> forms;
  for (int i = 0; i < h; ++i) forms.push_back(random_linear_form(n, derive_seed(seed, static_cast<std::uint64_t>(i))));
  SecantReport r;
  r.n = n;
  r.d = d;
  r.h = h;
  r.seed = seed;
  r.expected_dim = expected_secant_dim(n, d, h);
  r.computed_dim = tangent_span_rank(forms, d, tol) - 1;
  r.defective = r.computed_dim < r.expected_dim;
  r.vsp_dim_formula = h * (n + 1) - num_monomials(n, d);
  return r;
}

StableSecantReport terracini_dim_stable(int n, int d, int h, const std::vector<std::uint64_t>& seeds,
                                        const Tolerances& tol) {
  require(!seeds.empty(), "terracini_dim_stable needs at least one seed");
  StableSecantReport out;
  for (auto s : seeds) {
    SecantReport r = terracini_dim(n, d, h, s, tol);
    if (out.computed_dims.empty()) out.report = r;
    out.computed_dims.push_back(r.computed_dim);
  }
  out.stable = std::all_of(out.computed_dims.begin(), out.computed_dims.end(),
                           [&](int v) { return v == out.computed_dims.front(); });
  return out;
}

}  // namespace waring
