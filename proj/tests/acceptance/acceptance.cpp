// Runs the acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/decompose.hpp"
#include "waring/linalg.hpp"
#include "waring/random.hpp"
#include "waring/secant.hpp"

using namespace waring;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void check(Outcome& out, bool cond, const std::string& what) {
  if (!cond && out.ok) {
    out.ok = false;
    out.detail = what;
  }
}

std::string tag(int a, int b, int c) {
  std::ostringstream s;
  s << "(" << a << "," << b << "," << c << ")";
  return s.str();
}

// 1. dim VSP(F, h) equals h(n+1) - C(n+d, d) at a random decomposition.
Outcome dimension_formula() {
  Outcome out;
  const int cases[][4] = {{1, 3, 2, 0}, {1, 5, 3, 0}, {2, 3, 4, 2}, {2, 4, 6, 3},
                          {2, 5, 7, 0}, {2, 6, 10, 2}, {3, 3, 5, 0}, {4, 3, 8, 5}};
  for (const auto& c : cases) {
    const int n = c[0], d = c[1], h = c[2];
    const Decomposition dec = random_decomposition(n, d, h, derive_seed(101, n * 100 + d * 10 + h));
    const HomogeneousForm f = synthesize(dec, n + 1);
    const int dim = tangent_dimension(f, dec);
    check(out, dim == c[3] && dim == h * (n + 1) - num_monomials(n, d),
          tag(n, d, h) + " gave " + std::to_string(dim));
  }
  return out;
}

// Re-solves the weights of dec after permuting the variables by perm and maps
// the result back.
Decomposition reweigh_shuffled(const HomogeneousForm& f, const Decomposition& dec, const std::vector<int>& perm) {
  const int nv = f.num_vars();
  const auto basis = monomial_basis(f.n(), f.degree());
  CVector g(f.coeffs().size());
  for (const auto& alpha : basis) {
    std::vector<int> e(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = alpha[i];
    g(monomial_index(ExponentVector(e))) = f.coeff(alpha);
  }
  const HomogeneousForm fg(nv, f.degree(), g);
  std::vector<LinearForm> forms;
  for (const auto& t : dec.terms()) {
    CVector a(nv);
    for (int i = 0; i < nv; ++i) a(perm[static_cast<size_t>(i)]) = t.form[i];
    forms.emplace_back(a);
  }
  const WeightSolution w = solve_weights(fg, forms);
  std::vector<Term> terms;
  for (size_t k = 0; k < forms.size(); ++k) terms.push_back({w.weights(static_cast<Eigen::Index>(k)), dec.terms()[k].form});
  return Decomposition(f.degree(), terms);
}

// 2. A general plane quintic of rank 7 has a unique decomposition.
Outcome quintic_uniqueness() {
  Outcome out;
  for (int trial = 0; trial < 20; ++trial) {
    const Decomposition dec = random_decomposition(2, 5, 7, derive_seed(202, trial));
    const HomogeneousForm f = synthesize(dec, 3);
    check(out, tangent_dimension(f, dec) == 0, "tangent dimension nonzero at trial " + std::to_string(trial));
    const Decomposition a = reweigh_shuffled(f, dec, {1, 2, 0});
    const Decomposition b = reweigh_shuffled(f, dec, {2, 0, 1});
    const double gap = std::max(decomposition_distance(a, b), decomposition_distance(a, dec));
    check(out, gap <= 1e-6 && relative_residual(f, a) <= 1e-8,
          "shuffled re-solves disagree at trial " + std::to_string(trial));
  }
  return out;
}

// 3. Binary forms through the apolar parametrization.
Outcome sylvester_round_trip() {
  Outcome out;
  for (int h = 2; h <= 6; ++h) {
    for (int d = h; d <= 2 * h - 1; ++d) {
      std::optional<Decomposition> first;
      const HomogeneousForm f = random_form(1, d, derive_seed(303, d * 10 + h));
      for (int trial = 0; trial < 50; ++trial) {
        const VspSample s = sample_sylvester(f, h, derive_seed(304, trial));
        check(out, s.residual <= 1e-8, tag(1, d, h) + " residual " + std::to_string(s.residual));
        if (d == 2 * h - 1) {
          if (!first) first = s.decomposition;
          check(out, decomposition_distance(*first, s.decomposition) <= 1e-6,
                tag(1, d, h) + " decomposition depends on the seed");
        }
      }
    }
  }
  return out;
}

// 4. Quadrics through the simultaneous diagonalization of a pencil.
Outcome quadric_pencil() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t seed = derive_seed(404, n * 1000 + trial);
      const HomogeneousForm f = random_form(n, 2, seed);
      const HomogeneousForm g = random_form(n, 2, derive_seed(seed, 1));
      const PencilResult p = quadric_pencil_decompose(f, g);
      check(out, p.residual <= 1e-8, "n=" + std::to_string(n) + " residual " + std::to_string(p.residual));
      check(out, p.eigenvalues.size() == n + 1 && p.decomposition.size() == n + 1, "wrong eigenvalue count");
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          check(out, std::abs(p.eigenvalues(i) - p.eigenvalues(j)) > 1e-8 * p.eigenvalues.cwiseAbs().maxCoeff(),
                "repeated eigenvalue");
      ComplexGaussian rng(derive_seed(seed, 2));
      const Complex a = rng(), b = rng();
      const PencilResult q = quadric_pencil_decompose(f, g * a + f * b);
      check(out, decomposition_distance(p.decomposition, q.decomposition) <= 1e-6,
            "n=" + std::to_string(n) + " not invariant under G -> aG + bF");
    }
  }
  return out;
}

// 5. Plane cubics through the plane spanned by the partials.
Outcome plane_cubic_parametrization() {
  Outcome out;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = derive_seed(505, trial);
    const HomogeneousForm f = random_form(2, 3, seed);
    const CVector u = ComplexGaussian(derive_seed(seed, 1)).vector(3);
    const VspSample s = plane_cubic_vsp4(f, u);
    check(out, s.decomposition.size() == 4, "expected four points");
    check(out, s.residual <= 1e-8, "residual " + std::to_string(s.residual));
    std::vector<LinearForm> forms;
    for (const auto& t : s.decomposition.terms()) forms.push_back(t.form);
    for (size_t i = 0; i < forms.size(); ++i)
      for (size_t j = i + 1; j < forms.size(); ++j)
        check(out, linalg::chordal_distance(forms[i].coords(), forms[j].coords()) > 1e-8, "points collide");
    check(out, is_polar_polyhedron(f, forms).verdict, "polyhedron test rejected a plane cubic sample");

    const Decomposition planted = random_decomposition(2, 3, 4, derive_seed(seed, 2));
    const HomogeneousForm g = synthesize(planted, 3);
    const CVector v = plane_cubic_parameter(g, planted);
    const VspSample back = plane_cubic_vsp4(g, v);
    check(out, decomposition_distance(back.decomposition, planted) <= 1e-6,
          "planted decomposition not recovered at trial " + std::to_string(trial));
  }
  return out;
}

// 6. Any two decompositions of a quadric are joined by a short chain.
Outcome chains() {
  Outcome out;
  const int cases[][2] = {{2, 6}, {3, 7}};
  for (const auto& c : cases) {
    const int n = c[0], h = c[1];
    for (int trial = 0; trial < 25; ++trial) {
      const std::uint64_t seed = derive_seed(606, n * 100 + trial);
      const Decomposition a = random_decomposition(n, 2, h, derive_seed(seed, 1));
      const HomogeneousForm f = synthesize(a, n + 1);
      const Decomposition b = sample_quadric(f, h, derive_seed(seed, 2)).decomposition;
      const ChainCertificate cert = chain_connect(f, a, b, derive_seed(seed, 3));
      const ChainCheck v = verify_chain(f, cert);
      check(out, cert.sequence.size() <= 3, "chain longer than three");
      check(out, v.ok && v.max_residual <= 1e-8, "chain rejected: " + v.problem);
    }
  }
  return out;
}

// 7. Terracini reproduces the defective cases and the controls.
Outcome defectivity() {
  Outcome out;
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < 5; ++k) seeds.push_back(derive_seed(707, k));
  auto run = [&](int n, int d, int h, bool defective) {
    const StableSecantReport r = terracini_dim_stable(n, d, h, seeds);
    check(out, r.stable, tag(n, d, h) + " unstable across seeds");
    check(out, r.report.defective == defective,
          tag(n, d, h) + " computed " + std::to_string(r.report.computed_dim) + " expected " +
              std::to_string(r.report.expected_dim));
    if (defective) check(out, r.report.computed_dim == r.report.expected_dim - 1, tag(n, d, h) + " defect size");
  };
  const int bad[][3] = {{2, 2, 2}, {3, 2, 2}, {3, 2, 3}, {2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}};
  for (const auto& c : bad) run(c[0], c[1], c[2], true);
  for (int d = 1; d <= 8; ++d)
    for (int h = 1; h <= 6; ++h) run(1, d, h, false);
  run(2, 3, 4, false);
  run(2, 5, 7, false);
  return out;
}

// 8. Pairing, catalecticant and polyhedron identities.
Outcome apolarity_identities() {
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t seed = derive_seed(808, trial);
    const int n = 1 + trial % 3;
    const int d = 2 + (trial / 3) % 4;
    const int top = num_monomials(n, d);
    const int h = 1 + static_cast<int>(derive_seed(seed, 9) % static_cast<std::uint64_t>(std::min(top, 2 * (n + 1))));
    const Decomposition dec = random_decomposition(n, d, h, derive_seed(seed, 1));
    const HomogeneousForm f = synthesize(dec, n + 1);
    for (int t = 0; t <= d; ++t) {
      const CatalecticantMatrix m = catalecticant(f, t);
      const HomogeneousForm phi = random_form(n, t, derive_seed(seed, 100 + t));
      const HomogeneousForm paired = apolar_pairing(phi, f);
      const double gap = (m.entries * phi.coeffs() - paired.coeffs()).norm();
      check(out, gap <= 1e-9 * (1.0 + paired.norm()), "pairing differs from the catalecticant");
      const int r1 = linalg::numerical_rank(m.entries, 1e-10);
      const int r2 = linalg::numerical_rank(catalecticant(f, d - t).entries, 1e-10);
      check(out, r1 == r2, "catalecticant ranks not symmetric at " + tag(n, d, t));
    }
    std::vector<LinearForm> forms;
    for (const auto& t : dec.terms()) forms.push_back(t.form);
    check(out, is_polar_polyhedron(f, forms).verdict, "false negative at trial " + std::to_string(trial));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"dimension-formula", 10, dimension_formula},   {"quintic-uniqueness", 5, quintic_uniqueness},
      {"sylvester-round-trip", 10, sylvester_round_trip}, {"quadric-pencil", 20, quadric_pencil},
      {"plane-cubic-parametrization", 30, plane_cubic_parametrization}, {"chains", 20, chains},
      {"defectivity", 30, defectivity},               {"apolarity-identities", 20, apolarity_identities},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.budget_s) out = {false, "over the time budget"};
    std::printf("%s %d %-28s %.2fs/%.0fs%s%s\n", out.ok ? "PASS" : "FAIL", index++, c.name, secs, c.budget_s,
                out.ok ? "" : "  ", out.detail.c_str());
    if (!out.ok) ++failures;
  }
  return failures;
}
