#include "waring/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "waring/linalg.hpp"

namespace waring {

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) require(e >= 0, "exponents must be non-negative");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  require(o.num_vars() == num_vars(), "exponent vectors of different length");
  std::vector<int> r(exps_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.exps_[i];
  return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  require(o.divides(*this), "exponent subtraction below zero");
  std::vector<int> r(exps_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.exps_[i];
  return ExponentVector(std::move(r));
}

bool ExponentVector::divides(const ExponentVector& o) const {
  if (o.num_vars() != num_vars()) return false;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

std::string ExponentVector::label(const std::string& var) const {
  std::string out;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

int num_monomials(int n, int d) {
  if (n < 0 || d < 0) return 0;
  return static_cast<int>(binomial(n + d, d));
}

static double factorial(int k) { return std::tgamma(static_cast<double>(k) + 1.0); }

double factorial_product(const ExponentVector& alpha) {
  double r = 1.0;
  for (int e : alpha.values()) r *= factorial(e);
  return r;
}

double multinomial(const ExponentVector& alpha) {
  return std::round(factorial(alpha.degree()) / factorial_product(alpha));
}

double falling_factorial(const ExponentVector& alpha, const ExponentVector& beta) {
  if (!beta.divides(alpha)) return 0.0;
  double r = 1.0;
  for (int i = 0; i < alpha.num_vars(); ++i)
    for (int k = 0; k < beta[i]; ++k) r *= static_cast<double>(alpha[i] - k);
  return r;
}

namespace {

void enumerate(int pos, int remaining, std::vector<int>& cur, std::vector<ExponentVector>& out) {
  if (pos + 1 == static_cast<int>(cur.size())) {
    cur[static_cast<size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[static_cast<size_t>(pos)] = v;
    enumerate(pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<ExponentVector> monomial_basis(int n, int d) {
  require(n >= 0 && d >= 0, "monomial_basis needs n >= 0 and d >= 0");
  std::vector<ExponentVector> out;
  out.reserve(static_cast<size_t>(num_monomials(n, d)));
  std::vector<int> cur(static_cast<size_t>(n + 1), 0);
  enumerate(0, d, cur, out);
  return out;
}

int monomial_index(const ExponentVector& alpha) {
  const int n = alpha.num_vars() - 1;
  int remaining = alpha.degree();
  std::uint64_t idx = 0;
  for (int j = 0; j < n; ++j) {
    const int k = n - j;  // variables after position j
    const int span = remaining - alpha[j];
    if (span > 0) idx += binomial(span - 1 + k, k);
    remaining -= alpha[j];
  }
  return static_cast<int>(idx);
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(int num_vars, int degree)
    : HomogeneousForm(num_vars, degree, CVector::Zero(num_monomials(num_vars - 1, degree))) {}

HomogeneousForm::HomogeneousForm(int num_vars, int degree, CVector coeffs)
    : num_vars_(num_vars), degree_(degree), coeffs_(std::move(coeffs)) {
  require(num_vars >= 1, "a form needs at least one variable");
  require(degree >= 0, "degree must be non-negative");
  require(coeffs_.size() == num_monomials(num_vars - 1, degree),
          "coefficient vector length " + std::to_string(coeffs_.size()) + " does not match C(n+d,d) = " +
              std::to_string(num_monomials(num_vars - 1, degree)));
}

HomogeneousForm HomogeneousForm::monomial(const ExponentVector& alpha, Complex c) {
  HomogeneousForm f(alpha.num_vars(), alpha.degree());
  f.coeffs_(monomial_index(alpha)) = c;
  return f;
}

void HomogeneousForm::check_same_space(const HomogeneousForm& o) const {
  require(o.num_vars_ == num_vars_ && o.degree_ == degree_, "forms live in different spaces");
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  check_same_space(o);
  return {num_vars_, degree_, coeffs_ + o.coeffs_};
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
  check_same_space(o);
  return {num_vars_, degree_, coeffs_ - o.coeffs_};
}

HomogeneousForm HomogeneousForm::operator*(Complex s) const { return {num_vars_, degree_, coeffs_ * s}; }

CVector HomogeneousForm::scaled_coeffs() const {
  const auto basis = monomial_basis(n(), degree_);
  CVector out(coeffs_.size());
  for (size_t i = 0; i < basis.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = coeffs_(static_cast<Eigen::Index>(i)) / std::sqrt(multinomial(basis[i]));
  return out;
}

std::string HomogeneousForm::to_string(const std::string& var) const {
  const auto basis = monomial_basis(n(), degree_);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Complex c = coeffs_(static_cast<Eigen::Index>(i));
    if (c == Complex(0.0)) continue;
    if (!first) os << " + ";
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)*" << basis[i].label(var);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(CVector coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 1, "a linear form needs at least one coordinate");
  require(coords_.allFinite(), "linear form has non-finite coordinates");
  require(coords_.cwiseAbs().maxCoeff() > 0.0, "linear form is identically zero");
}

LinearForm LinearForm::variable(int num_vars, int i) {
  require(i >= 0 && i < num_vars, "variable index out of range");
  CVector c = CVector::Zero(num_vars);
  c(i) = 1.0;
  return LinearForm(c);
}

int LinearForm::pivot_index(double pivot_tol) const {
  const double mx = coords_.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < coords_.size(); ++i)
    if (std::abs(coords_(i)) > pivot_tol * mx) return static_cast<int>(i);
  return 0;
}

Complex LinearForm::pivot_value(double pivot_tol) const { return coords_(pivot_index(pivot_tol)); }

LinearForm LinearForm::normalized(double pivot_tol) const {
  const int p = pivot_index(pivot_tol);
  CVector c = coords_ / coords_(p);
  for (Eigen::Index i = 0; i < p; ++i) c(i) = 0.0;
  c(p) = 1.0;
  return LinearForm(c);
}

ProjectivePoint::ProjectivePoint(const CVector& coords, double pivot_tol)
    : coords_(LinearForm(coords).normalized(pivot_tol).coords()) {}

// ---------------------------------------------------------------------------

HomogeneousForm power_form(const LinearForm& l, int d) {
  require(d >= 0, "power degree must be non-negative");
  const int nv = l.num_vars();
  const auto basis = monomial_basis(nv - 1, d);
  CVector c(static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) {
    Complex v = multinomial(basis[k]);
    for (int j = 0; j < nv; ++j)
      for (int e = 0; e < basis[k][j]; ++e) v *= l[j];
    c(static_cast<Eigen::Index>(k)) = v;
  }
  return {nv, d, c};
}

std::optional<std::string> Decomposition::violation(int degree, const std::vector<Term>& terms,
                                                    const Tolerances& tol) {
  if (degree < 1) return "decomposition degree must be at least 1";
  if (terms.empty()) return std::nullopt;
  const int nv = terms.front().form.num_vars();
  for (const auto& t : terms)
    if (t.form.num_vars() != nv) return "linear forms have different numbers of variables";

  const int h = static_cast<int>(terms.size());
  std::vector<HomogeneousForm> powers;
  powers.reserve(terms.size());
  double max_contrib = 0.0;
  std::vector<double> contrib;
  for (const auto& t : terms) {
    if (!std::isfinite(t.weight.real()) || !std::isfinite(t.weight.imag())) return "non-finite weight";
    powers.push_back(power_form(t.form, degree));
    contrib.push_back(std::abs(t.weight) * powers.back().norm());
    max_contrib = std::max(max_contrib, contrib.back());
  }
  for (int i = 0; i < h; ++i)
    if (contrib[static_cast<size_t>(i)] == 0.0 || contrib[static_cast<size_t>(i)] <= tol.weight * max_contrib)
      return "weight of term " + std::to_string(i) + " vanishes";

  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (linalg::chordal_distance(terms[static_cast<size_t>(i)].form.coords(),
                                   terms[static_cast<size_t>(j)].form.coords()) <= tol.distinct)
        return "terms " + std::to_string(i) + " and " + std::to_string(j) + " are projectively equal";

  CMatrix m(powers.front().coeffs().size(), h);
  for (int i = 0; i < h; ++i) m.col(i) = powers[static_cast<size_t>(i)].coeffs();
  if (linalg::column_normalized_rank(m, tol.rank) < h) return "the powers L_i^d are linearly dependent";
  return std::nullopt;
}

Decomposition::Decomposition(int degree, std::vector<Term> terms, const Tolerances& tol)
    : degree_(degree), terms_(std::move(terms)) {
  if (auto why = violation(degree_, terms_, tol)) fail(ErrorKind::InvalidArgument, "invalid decomposition: " + *why);
}

HomogeneousForm synthesize(int degree, const std::vector<Term>& terms, int num_vars) {
  HomogeneousForm f(num_vars, degree);
  for (const auto& t : terms) {
    require(t.form.num_vars() == num_vars, "linear form has the wrong number of variables");
    f = f + power_form(t.form, degree) * t.weight;
  }
  return f;
}

HomogeneousForm synthesize(const Decomposition& dec, int num_vars) {
  return synthesize(dec.degree(), dec.terms(), num_vars);
}

HomogeneousForm partial_derivative(const HomogeneousForm& f, int var) {
  require(var >= 0 && var < f.num_vars(), "variable index out of range");
  require(f.degree() >= 1, "cannot differentiate a constant form");
  HomogeneousForm out(f.num_vars(), f.degree() - 1);
  CVector c = CVector::Zero(num_monomials(f.n(), f.degree() - 1));
  const auto basis = monomial_basis(f.n(), f.degree());
  for (size_t k = 0; k < basis.size(); ++k) {
    const int e = basis[k][var];
    if (e == 0) continue;
    std::vector<int> lowered = basis[k].values();
    lowered[static_cast<size_t>(var)] -= 1;
    c(monomial_index(ExponentVector(lowered))) += static_cast<double>(e) * f.coeffs()(static_cast<Eigen::Index>(k));
  }
  return {f.num_vars(), f.degree() - 1, c};
}

HomogeneousForm multiply_by_variable(const HomogeneousForm& f, int var) {
  require(var >= 0 && var < f.num_vars(), "variable index out of range");
  CVector c = CVector::Zero(num_monomials(f.n(), f.degree() + 1));
  const auto basis = monomial_basis(f.n(), f.degree());
  for (size_t k = 0; k < basis.size(); ++k) {
    std::vector<int> raised = basis[k].values();
    raised[static_cast<size_t>(var)] += 1;
    c(monomial_index(ExponentVector(raised))) += f.coeffs()(static_cast<Eigen::Index>(k));
  }
  return {f.num_vars(), f.degree() + 1, c};
}

DerivativeSpan derivative_span(const HomogeneousForm& f, int order, const Tolerances& tol) {
  require(order >= 1 && order < f.degree(), "derivative order must satisfy 1 <= l < d");
  DerivativeSpan out;
  for (const auto& beta : monomial_basis(f.n(), order)) {
    HomogeneousForm g = f;
    for (int i = 0; i < f.num_vars(); ++i)
      for (int k = 0; k < beta[i]; ++k) g = partial_derivative(g, i);
    out.derivatives.push_back(std::move(g));
  }
  CMatrix m(out.derivatives.front().coeffs().size(), static_cast<Eigen::Index>(out.derivatives.size()));
  for (size_t j = 0; j < out.derivatives.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = out.derivatives[j].coeffs();
  out.rank = linalg::numerical_rank(m, tol.rank);
  return out;
}

ProjectivePoint veronese(const LinearForm& l, int d, double pivot_tol) {
  require(d >= 1, "Veronese degree must be at least 1");
  return ProjectivePoint(power_form(l, d).coeffs(), pivot_tol);
}

// ---------------------------------------------------------------------------

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool coords_less(const CVector& a, const CVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!nearly_equal(a(i).real(), b(i).real())) return a(i).real() < b(i).real();
    if (!nearly_equal(a(i).imag(), b(i).imag())) return a(i).imag() < b(i).imag();
  }
  return false;
}

Term normalize_term(const Term& t, int d, double pivot_tol) {
  const Complex c = t.form.pivot_value(pivot_tol);
  return {t.weight * std::pow(c, d), t.form.normalized(pivot_tol)};
}

}  // namespace

Decomposition canonical_form(const Decomposition& dec, const Tolerances& tol) {
  std::vector<Term> terms;
  terms.reserve(dec.terms().size());
  for (const auto& t : dec.terms()) terms.push_back(normalize_term(t, dec.degree(), tol.pivot));
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return coords_less(a.form.coords(), b.form.coords()); });
  return Decomposition(dec.degree(), std::move(terms), tol);
}

double decomposition_distance(const Decomposition& a, const Decomposition& b, const Tolerances& tol) {
  if (a.degree() != b.degree() || a.size() != b.size() || a.num_vars() != b.num_vars())
    return std::numeric_limits<double>::infinity();
  const int h = a.size();
  std::vector<Term> ta, tb;
  for (const auto& t : a.terms()) ta.push_back(normalize_term(t, a.degree(), tol.pivot));
  for (const auto& t : b.terms()) tb.push_back(normalize_term(t, b.degree(), tol.pivot));

  auto term_gap = [](const Term& x, const Term& y) {
    double g = (x.form.coords() - y.form.coords()).cwiseAbs().maxCoeff();
    const double scale = std::max({1e-300, std::abs(x.weight), std::abs(y.weight)});
    return std::max(g, std::abs(x.weight - y.weight) / scale);
  };

  // Greedy matching on the smallest remaining gap.
  std::vector<bool> used_a(static_cast<size_t>(h), false), used_b(static_cast<size_t>(h), false);
  double worst = 0.0;
  for (int k = 0; k < h; ++k) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < h; ++i) {
      if (used_a[static_cast<size_t>(i)]) continue;
      for (int j = 0; j < h; ++j) {
        if (used_b[static_cast<size_t>(j)]) continue;
        const double g = term_gap(ta[static_cast<size_t>(i)], tb[static_cast<size_t>(j)]);
        if (g < best) best = g, bi = i, bj = j;
      }
    }
    used_a[static_cast<size_t>(bi)] = used_b[static_cast<size_t>(bj)] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double relative_residual(const HomogeneousForm& f, const Decomposition& dec) {
  const HomogeneousForm s = synthesize(dec, f.num_vars());
  require(s.degree() == f.degree(), "decomposition degree does not match the form");
  const double diff = (f.coeffs() - s.coeffs()).norm();
  const double nf = f.norm();
  return nf > 0.0 ? diff / nf : diff;
}

}  // namespace waring
