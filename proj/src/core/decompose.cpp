#include "waring/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "waring/apolarity.hpp"
#include "waring/linalg.hpp"
#include "waring/random.hpp"
#include "waring/roots.hpp"
#include "waring/secant.hpp"

namespace waring {

namespace {

void check_distinct(const std::vector<LinearForm>& forms, const Tolerances& tol) {
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j)
      if (linalg::chordal_distance(forms[i].coords(), forms[j].coords()) <= tol.distinct)
        fail(ErrorKind::InvalidArgument, "linear forms " + std::to_string(i) + " and " + std::to_string(j) +
                                             " are projectively equal");
}

}  // namespace

WeightSolution solve_weights(const HomogeneousForm& f, const std::vector<LinearForm>& forms, const Tolerances& tol) {
  require(!forms.empty(), "solve_weights needs at least one linear form");
  check_distinct(forms, tol);
  const int h = static_cast<int>(forms.size());
  CMatrix a(f.coeffs().size(), h);
  for (int i = 0; i < h; ++i) {
    require(forms[static_cast<size_t>(i)].num_vars() == f.num_vars(), "linear form has the wrong number of variables");
    a.col(i) = power_form(forms[static_cast<size_t>(i)], f.degree()).coeffs();
  }
  WeightSolution sol;
  // Column scaling keeps the rank decision independent of the representatives.
  Eigen::VectorXd scale(h);
  for (int i = 0; i < h; ++i) scale(i) = a.col(i).norm();
  const CMatrix an = a * scale.cwiseInverse().asDiagonal();
  sol.rank = linalg::numerical_rank(an, tol.rank);
  sol.rank_deficient = sol.rank < h;
  Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(an);
  const CVector y = cod.solve(f.coeffs());
  sol.weights = y.cwiseQuotient(scale.cast<Complex>());
  const double nf = f.norm();
  const double diff = (a * sol.weights - f.coeffs()).norm();
  sol.residual = nf > 0.0 ? diff / nf : diff;
  return sol;
}

Decomposition decomposition_from_forms(const HomogeneousForm& f, const std::vector<LinearForm>& forms,
                                       const Tolerances& tol) {
  const WeightSolution sol = solve_weights(f, forms, tol);
  if (sol.rank_deficient) fail(ErrorKind::Rejected, "the powers of the linear forms are linearly dependent");
  std::vector<Term> terms;
  for (size_t i = 0; i < forms.size(); ++i) terms.push_back({sol.weights(static_cast<Eigen::Index>(i)), forms[i]});
  if (auto why = Decomposition::violation(f.degree(), terms, tol)) fail(ErrorKind::Rejected, *why);
  if (sol.residual > tol.residual)
    fail(ErrorKind::Rejected, "residual " + std::to_string(sol.residual) + " exceeds tolerance");
  return Decomposition(f.degree(), std::move(terms), tol);
}

// --- binary forms -----------------------------------------------------------

int sylvester_parameter_count(int d, int h) { return 2 * h - d; }

VspSample sylvester_parametrize(const HomogeneousForm& f, int h, const CVector& u, const Tolerances& tol) {
  if (f.num_vars() != 2) fail(ErrorKind::Precondition, "sylvester_parametrize needs a binary form");
  const int d = f.degree();
  if (!(h >= 1 && h <= d && d <= 2 * h - 1))
    fail(ErrorKind::Precondition, "sylvester_parametrize needs h <= d <= 2h - 1");
  const ApolarBasis ap = apolar_space(f, h, tol);
  if (ap.dim() != 2 * h - d)
    fail(ErrorKind::Precondition, "form is not general: dim AP_h(F) = " + std::to_string(ap.dim()) +
                                      ", expected " + std::to_string(2 * h - d));
  require(u.size() == ap.dim(), "parameter must have 2h - d = " + std::to_string(ap.dim()) + " coordinates");
  if (u.cwiseAbs().maxCoeff() == 0.0) fail(ErrorKind::InvalidArgument, "parameter is the zero vector");
  const CVector phi = ap.basis * u;
  const std::vector<CVector> roots = binary_form_roots(phi, tol);
  if (static_cast<int>(roots.size()) != h) fail(ErrorKind::Rejected, "apolar form has the wrong number of roots");
  std::vector<LinearForm> forms;
  for (const auto& r : roots) forms.emplace_back(r);
  Decomposition dec = decomposition_from_forms(f, forms, tol);
  const double res = relative_residual(f, dec);
  return {"sylvester", u, std::move(dec), res};
}

// --- quadrics ---------------------------------------------------------------

CMatrix quadric_matrix(const HomogeneousForm& f) {
  require(f.degree() == 2, "quadric_matrix needs a quadric");
  const int nv = f.num_vars();
  CMatrix a = CMatrix::Zero(nv, nv);
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) {
      std::vector<int> e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(i)] += 1;
      e[static_cast<size_t>(j)] += 1;
      const Complex c = f.coeff(ExponentVector(e));
      if (i == j) {
        a(i, i) = c;
      } else {
        a(i, j) = a(j, i) = c / 2.0;
      }
    }
  return a;
}

PencilResult quadric_pencil_decompose(const HomogeneousForm& f, const HomogeneousForm& g, const Tolerances& tol) {
  if (f.degree() != 2 || g.degree() != 2) fail(ErrorKind::Precondition, "the pencil needs two quadrics");
  require(f.num_vars() == g.num_vars(), "quadrics have different numbers of variables");
  const int nv = f.num_vars();
  const CMatrix af = quadric_matrix(f);
  const CMatrix ag = quadric_matrix(g);
  const Eigen::VectorXd sv = linalg::singular_values(af);
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= tol.rank * sv(0)) fail(ErrorKind::Precondition, "quadric F is singular");

  const CMatrix m = af.partialPivLu().solve(ag);
  Eigen::ComplexEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) fail(ErrorKind::Rejected, "pencil eigenvalue iteration did not converge");
  const CVector mu = es.eigenvalues();
  const double spectral = mu.cwiseAbs().maxCoeff();
  if (spectral == 0.0) fail(ErrorKind::Rejected, "G is a zero quadric: all eigenvalues vanish");
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (std::abs(mu(i) - mu(j)) <= tol.distinct * spectral)
        fail(ErrorKind::Rejected, "pencil has a repeated eigenvalue: G is not general in the pencil");

  const CMatrix v = es.eigenvectors();
  const CMatrix vinv = v.partialPivLu().inverse();
  std::vector<LinearForm> forms;
  PencilResult out{mu, {}, Decomposition(2, {}), 0.0};
  for (int i = 0; i < nv; ++i) {
    forms.emplace_back(CVector(vinv.row(i).transpose()));
    out.vertices.emplace_back(v.col(i), tol.pivot);
  }
  out.decomposition = decomposition_from_forms(f, forms, tol);
  out.residual = relative_residual(f, out.decomposition);
  return out;
}

VspSample quadric_sample_vsp(const HomogeneousForm& f, int h, const std::vector<Term>& extra_terms,
                             const HomogeneousForm& g, const Tolerances& tol) {
  if (f.degree() != 2) fail(ErrorKind::Precondition, "quadric_sample_vsp needs a quadric");
  const int nv = f.num_vars();
  if (h <= nv) fail(ErrorKind::Precondition, "quadric_sample_vsp needs h > n + 1");
  if (static_cast<int>(extra_terms.size()) != h - nv)
    fail(ErrorKind::InvalidArgument, "quadric_sample_vsp needs exactly h - (n+1) extra terms");
  const HomogeneousForm remainder = f - synthesize(2, extra_terms, nv);
  const PencilResult pencil = quadric_pencil_decompose(remainder, g, tol);
  std::vector<Term> terms(extra_terms);
  for (const auto& t : pencil.decomposition.terms()) terms.push_back(t);
  if (auto why = Decomposition::violation(2, terms, tol)) fail(ErrorKind::Rejected, "combined decomposition: " + *why);
  Decomposition dec(2, std::move(terms), tol);
  const double res = relative_residual(f, dec);
  if (res > tol.residual) fail(ErrorKind::Rejected, "residual " + std::to_string(res) + " exceeds tolerance");
  return {"quadric", g.coeffs(), std::move(dec), res};
}

// --- conics and plane cubics -------------------------------------------------

namespace {

/// Conic on P^2 obtained by pulling the functional h on conic coefficients back
/// through the Veronese map a |-> (a . x)^2.
Eigen::Matrix3cd pulled_back_conic(const CVector& h) {
  const auto basis = monomial_basis(2, 2);
  CVector c(6);
  for (int k = 0; k < 6; ++k) c(k) = h(k) * multinomial(basis[static_cast<size_t>(k)]);
  return conic_matrix(c);
}

std::vector<LinearForm> veronese_preimages(const CVector& h1, const CVector& h2, const Tolerances& tol) {
  const auto pts = intersect_conics(pulled_back_conic(h1), pulled_back_conic(h2), tol);
  std::vector<LinearForm> forms;
  for (const auto& p : pts) forms.emplace_back(CVector(p));
  return forms;
}

CMatrix first_partials(const HomogeneousForm& f) {
  CMatrix h(num_monomials(f.n(), f.degree() - 1), f.num_vars());
  for (int i = 0; i < f.num_vars(); ++i) h.col(i) = partial_derivative(f, i).coeffs();
  return h;
}

}  // namespace

VspSample conic_vsp4_sample(const HomogeneousForm& f, const ConicPlane& plane, const Tolerances& tol) {
  if (f.num_vars() != 3 || f.degree() != 2) fail(ErrorKind::Precondition, "conic_vsp4_sample needs a plane conic");
  require(plane.h1.size() == 6 && plane.h2.size() == 6, "plane functionals need 6 coordinates");
  for (const CVector* h : {&plane.h1, &plane.h2}) {
    const double nh = h->norm();
    require(nh > 0.0, "plane functional is zero");
    const double r = std::abs(h->cwiseProduct(f.coeffs()).sum()) / (nh * f.norm());
    if (r > tol.inclusion) fail(ErrorKind::Precondition, "the plane does not pass through [F]");
  }
  CMatrix pair(6, 2);
  pair << plane.h1, plane.h2;
  if (linalg::numerical_rank(pair, tol.rank) < 2)
    fail(ErrorKind::InvalidArgument, "plane functionals are dependent");
  Decomposition dec = decomposition_from_forms(f, veronese_preimages(plane.h1, plane.h2, tol), tol);
  CVector param(12);
  param << plane.h1, plane.h2;
  const double res = relative_residual(f, dec);
  return {"conic", param, std::move(dec), res};
}

ConicPlane conic_plane_of(const Decomposition& dec, const Tolerances& tol) {
  require(dec.degree() == 2 && dec.size() == 4 && dec.num_vars() == 3, "conic_plane_of needs a 4-term conic decomposition");
  CMatrix rows(4, 6);
  for (int i = 0; i < 4; ++i) rows.row(i) = power_form(dec[i].form, 2).coeffs().transpose();
  const CMatrix k = linalg::null_space(rows, tol.rank);
  require(k.cols() == 2, "the squares do not span a 3-plane");
  return {k.col(0), k.col(1)};
}

ConicPlane random_conic_plane(const HomogeneousForm& f, std::uint64_t seed) {
  require(f.num_vars() == 3 && f.degree() == 2, "random_conic_plane needs a plane conic");
  ComplexGaussian g(seed);
  const CVector& c = f.coeffs();
  auto through_f = [&](CVector r) {
    const Complex s = (r.transpose() * c)(0) / c.squaredNorm();
    return CVector(r - s * c.conjugate());
  };
  return {through_f(g.vector(6)), through_f(g.vector(6))};
}

VspSample plane_cubic_vsp4(const HomogeneousForm& f, const CVector& u, const Tolerances& tol) {
  if (f.num_vars() != 3 || f.degree() != 3) fail(ErrorKind::Precondition, "plane_cubic_vsp4 needs a plane cubic");
  require(u.size() == 3, "the parameter u must have 3 coordinates");
  if (u.cwiseAbs().maxCoeff() == 0.0) fail(ErrorKind::InvalidArgument, "parameter is the zero vector");
  const CMatrix partials = first_partials(f);
  if (linalg::numerical_rank(partials, tol.rank) < 3)
    fail(ErrorKind::Precondition, "form is not general: the first partials span less than a plane");
  const CMatrix complement = linalg::orthogonal_complement(partials, tol.rank);
  CMatrix span(6, 4);
  span << partials, complement * u;
  const CMatrix hyper = linalg::null_space(span.transpose(), tol.rank);
  if (hyper.cols() != 2) fail(ErrorKind::Rejected, "the selected 3-plane is degenerate");
  Decomposition dec = decomposition_from_forms(f, veronese_preimages(hyper.col(0), hyper.col(1), tol), tol);
  const double res = relative_residual(f, dec);
  return {"dk", u, std::move(dec), res};
}

CVector plane_cubic_parameter(const HomogeneousForm& f, const Decomposition& dec, const Tolerances& tol) {
  require(f.num_vars() == 3 && f.degree() == 3, "plane_cubic_parameter needs a plane cubic");
  require(dec.size() == 4 && dec.num_vars() == 3, "plane_cubic_parameter needs a 4-term decomposition");
  const CMatrix complement = linalg::orthogonal_complement(first_partials(f), tol.rank);
  require(complement.cols() == 3, "form is not general");
  CMatrix squares(6, 4);
  for (int i = 0; i < 4; ++i) squares.col(i) = power_form(dec[i].form, 2).coeffs();
  const CMatrix w = complement.adjoint() * squares;
  Eigen::Index best = 0;
  w.colwise().norm().maxCoeff(&best);
  CVector u = w.col(best);
  return u / u.norm();
}

// --- seeded samplers --------------------------------------------------------

namespace {

template <class Fn>
auto with_retries(std::uint64_t seed, Fn&& attempt) {
  std::string last;
  for (int k = 0; k < kRetryBudget; ++k) {
    try {
      return attempt(derive_seed(seed, static_cast<std::uint64_t>(k)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Rejected) throw;
      last = e.what();
    }
  }
  fail(ErrorKind::Rejected, "sampler exhausted its retry budget: " + last);
}

std::vector<Term> random_terms(int n, int count, std::uint64_t seed) {
  ComplexGaussian g(seed);
  std::vector<Term> out;
  for (int i = 0; i < count; ++i) {
    const Complex w = g();
    out.push_back({w, LinearForm(g.vector(n + 1))});
  }
  return out;
}

}  // namespace

VspSample sample_sylvester(const HomogeneousForm& f, int h, std::uint64_t seed, const Tolerances& tol) {
  const int k = sylvester_parameter_count(f.degree(), h);
  return with_retries(seed, [&](std::uint64_t s) {
    ComplexGaussian g(s);
    return sylvester_parametrize(f, h, g.vector(std::max(k, 1)), tol);
  });
}

PencilResult sample_pencil(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol) {
  return with_retries(seed, [&](std::uint64_t s) { return quadric_pencil_decompose(f, random_form(f.n(), 2, s), tol); });
}

VspSample sample_quadric(const HomogeneousForm& f, int h, std::uint64_t seed, const Tolerances& tol) {
  if (f.degree() != 2) fail(ErrorKind::Precondition, "sample_quadric needs a quadric");
  const int nv = f.num_vars();
  if (h < nv) fail(ErrorKind::Precondition, "a general quadric needs at least n + 1 terms");
  return with_retries(seed, [&](std::uint64_t s) {
    const HomogeneousForm g = random_form(f.n(), 2, derive_seed(s, 1));
    if (h == nv) {
      PencilResult p = quadric_pencil_decompose(f, g, tol);
      return VspSample{"pencil", g.coeffs(), std::move(p.decomposition), p.residual};
    }
    try {
      return quadric_sample_vsp(f, h, random_terms(f.n(), h - nv, derive_seed(s, 2)), g, tol);
    } catch (const Error& e) {
      // f and h were checked above, so this is a singular remainder: a degenerate draw.
      if (e.kind() == ErrorKind::Precondition) fail(ErrorKind::Rejected, e.what());
      throw;
    }
  });
}

VspSample sample_conic(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol) {
  return with_retries(seed, [&](std::uint64_t s) { return conic_vsp4_sample(f, random_conic_plane(f, s), tol); });
}

VspSample sample_plane_cubic(const HomogeneousForm& f, std::uint64_t seed, const Tolerances& tol) {
  return with_retries(seed, [&](std::uint64_t s) {
    ComplexGaussian g(s);
    return plane_cubic_vsp4(f, g.vector(3), tol);
  });
}

// --- chains -----------------------------------------------------------------

bool has_solver(int n, int d, int h) {
  if (n == 1) return h >= 1 && h <= d && d <= 2 * h - 1;
  if (d == 2) return h >= n + 1;
  return n == 2 && d == 3 && h == 4;
}

namespace {

/// Runs the solver family for (n, d, h) on the form r.
Decomposition solve_family(const HomogeneousForm& r, int h, const ChainParams& p, const Tolerances& tol) {
  const int n = r.n();
  const int d = r.degree();
  if (!has_solver(n, d, h))
    fail(ErrorKind::Precondition, "no decomposition solver for (n, d, h) = (" + std::to_string(n) + ", " +
                                      std::to_string(d) + ", " + std::to_string(h) + ")");
  ComplexGaussian g(p.seed);
  if (n == 1) {
    const CVector u = p.u ? *p.u : g.vector(sylvester_parameter_count(d, h));
    return sylvester_parametrize(r, h, u, tol).decomposition;
  }
  if (d == 2) {
    const HomogeneousForm pencil = p.pencil ? *p.pencil : random_form(n, 2, derive_seed(p.seed, 1));
    if (h == n + 1) return quadric_pencil_decompose(r, pencil, tol).decomposition;
    const std::vector<Term> extra = p.extra_terms ? *p.extra_terms : random_terms(n, h - n - 1, derive_seed(p.seed, 2));
    return quadric_sample_vsp(r, h, extra, pencil, tol).decomposition;
  }
  const CVector u = p.u ? *p.u : g.vector(3);
  return plane_cubic_vsp4(r, u, tol).decomposition;
}

Decomposition join(const std::vector<Term>& kept, const Decomposition& rest, const HomogeneousForm& f,
                   const Tolerances& tol) {
  std::vector<Term> terms(kept);
  for (const auto& t : rest.terms()) terms.push_back(t);
  if (auto why = Decomposition::violation(f.degree(), terms, tol)) fail(ErrorKind::Rejected, "chain move: " + *why);
  Decomposition out(f.degree(), std::move(terms), tol);
  const double res = relative_residual(f, out);
  if (res > tol.residual) fail(ErrorKind::Rejected, "chain move residual " + std::to_string(res) + " exceeds tolerance");
  return out;
}

double term_gap(const Term& a, const Term& b, int d, const Tolerances& tol) {
  return decomposition_distance(Decomposition(d, {a}, tol), Decomposition(d, {b}, tol), tol);
}

}  // namespace

Decomposition chain_step(const HomogeneousForm& f, const Decomposition& dec, int keep_index, const ChainParams& params,
                         const Tolerances& tol) {
  if (keep_index < 0 || keep_index >= dec.size()) fail(ErrorKind::InvalidArgument, "keep_index out of range");
  require(dec.degree() == f.degree(), "decomposition degree does not match the form");
  const Term& kept = dec[keep_index];
  const HomogeneousForm remainder = f - power_form(kept.form, f.degree()) * kept.weight;
  const Decomposition rest = solve_family(remainder, dec.size() - 1, params, tol);
  return join({kept}, rest, f, tol);
}

ChainCertificate chain_connect(const HomogeneousForm& f, const Decomposition& a, const Decomposition& b,
                               std::uint64_t seed, const Tolerances& tol) {
  if (f.degree() != 2) fail(ErrorKind::Precondition, "chain_connect works on quadrics");
  const int nv = f.num_vars();
  const int h = a.size();
  if (b.size() != h) fail(ErrorKind::InvalidArgument, "decompositions have different lengths");
  if (h < nv + 2) fail(ErrorKind::Precondition, "chain_connect needs h >= n + 3");
  for (const Decomposition* dec : {&a, &b}) {
    if (dec->degree() != 2 || dec->num_vars() != nv) fail(ErrorKind::InvalidArgument, "decomposition does not match F");
    if (relative_residual(f, *dec) > tol.residual) fail(ErrorKind::Precondition, "input is not a decomposition of F");
  }

  ChainCertificate cert;
  if (decomposition_distance(a, b, tol) <= tol.residual) {
    cert.sequence = {a};
    return cert;
  }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (term_gap(a[i], b[j], 2, tol) <= tol.residual) {
        cert.sequence = {a, b};
        cert.links = {{i, j}};
        return cert;
      }

  // Terms 0 of each side unless they are projectively equal.
  int ia = 0, ib = 0;
  if (linalg::chordal_distance(a[0].form.coords(), b[0].form.coords()) <= tol.distinct) ib = 1;

  const HomogeneousForm remainder =
      f - power_form(a[ia].form, 2) * a[ia].weight - power_form(b[ib].form, 2) * b[ib].weight;
  std::string last;
  for (int k = 0; k < kRetryBudget; ++k) {
    ChainParams p;
    p.seed = derive_seed(seed, static_cast<std::uint64_t>(k));
    try {
      const Decomposition rest = solve_family(remainder, h - 2, p, tol);
      Decomposition mid = join({a[ia], b[ib]}, rest, f, tol);
      cert.sequence = {a, std::move(mid), b};
      cert.links = {{ia, 0}, {1, ib}};
      return cert;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Rejected && e.kind() != ErrorKind::Precondition) throw;
      last = e.what();
    }
  }
  fail(ErrorKind::Rejected, "chain_connect exhausted its retry budget: " + last);
}

ChainCheck verify_chain(const HomogeneousForm& f, const ChainCertificate& cert, const Tolerances& tol) {
  ChainCheck out;
  if (cert.sequence.empty()) {
    out.problem = "empty chain";
    return out;
  }
  if (cert.links.size() + 1 != cert.sequence.size()) {
    out.problem = "link count does not match the sequence";
    return out;
  }
  for (const auto& dec : cert.sequence) out.max_residual = std::max(out.max_residual, relative_residual(f, dec));
  for (size_t k = 0; k < cert.links.size(); ++k) {
    const auto [i, j] = cert.links[k];
    const Decomposition& x = cert.sequence[k];
    const Decomposition& y = cert.sequence[k + 1];
    if (i < 0 || i >= x.size() || j < 0 || j >= y.size()) {
      out.problem = "link index out of range";
      return out;
    }
    out.max_link_gap = std::max(out.max_link_gap, term_gap(x[i], y[j], f.degree(), tol));
  }
  if (out.max_residual > tol.residual) out.problem = "a decomposition in the chain does not synthesize F";
  else if (out.max_link_gap > tol.residual) out.problem = "a declared shared term does not match";
  out.ok = out.problem.empty();
  return out;
}

// --- dimension --------------------------------------------------------------

int tangent_dimension(const HomogeneousForm& f, const Decomposition& dec, const Tolerances& tol) {
  require(dec.size() >= 1, "tangent_dimension needs a nonempty decomposition");
  require(dec.num_vars() == f.num_vars() && dec.degree() == f.degree(), "decomposition does not match the form");
  const double res = relative_residual(f, dec);
  if (res > tol.residual) fail(ErrorKind::Precondition, "decomposition does not synthesize F (residual " +
                                                            std::to_string(res) + ")");
  const int d = f.degree();
  std::vector<LinearForm> scaled;
  for (const auto& t : dec.terms()) scaled.emplace_back(CVector(t.form.coords() * std::pow(t.weight, 1.0 / d)));
  return dec.size() * f.num_vars() - tangent_span_rank(scaled, d, tol);
}

}  // namespace waring
