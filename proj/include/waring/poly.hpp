#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/types.hpp"

namespace waring {

/// Multidegree (alpha_0, ..., alpha_n) of a monomial x_0^alpha_0 ... x_n^alpha_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exps);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return exps_; }

  ExponentVector operator+(const ExponentVector& o) const;
  /// alpha - beta; requires beta <= alpha componentwise.
  ExponentVector operator-(const ExponentVector& o) const;
  bool divides(const ExponentVector& o) const;  // this <= o componentwise

  auto operator<=>(const ExponentVector& o) const { return exps_ <=> o.exps_; }
  bool operator==(const ExponentVector& o) const { return exps_ == o.exps_; }

  /// "x0^2*x1", or "1" for the constant monomial. var is the variable prefix.
  std::string label(const std::string& var = "x") const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

std::uint64_t binomial(int n, int k);
/// Number of monomials of degree d in n+1 variables, C(n+d, d).
int num_monomials(int n, int d);
/// d! / (alpha_0! ... alpha_n!)
double multinomial(const ExponentVector& alpha);
/// alpha_0! ... alpha_n!
double factorial_product(const ExponentVector& alpha);
/// alpha! / (alpha - beta)!, zero unless beta <= alpha.
double falling_factorial(const ExponentVector& alpha, const ExponentVector& beta);

/// All exponent vectors of total degree d in n+1 variables, in lexicographic
/// descending order: for n = 1, d = 2 this is (2,0), (1,1), (0,2). Every dense
/// coefficient vector in the library is indexed by this order.
std::vector<ExponentVector> monomial_basis(int n, int d);

/// Position of alpha in monomial_basis(alpha.num_vars() - 1, alpha.degree()).
int monomial_index(const ExponentVector& alpha);

/// Dense homogeneous form of degree d in n+1 variables, stored as plain
/// monomial coefficients f_alpha of F = sum f_alpha x^alpha. The same type
/// holds forms in the dual variables xi.
class HomogeneousForm {
 public:
  HomogeneousForm(int num_vars, int degree);  // zero form
  HomogeneousForm(int num_vars, int degree, CVector coeffs);

  static HomogeneousForm monomial(const ExponentVector& alpha, Complex c = 1.0);

  int num_vars() const { return num_vars_; }
  int n() const { return num_vars_ - 1; }
  int degree() const { return degree_; }
  const CVector& coeffs() const { return coeffs_; }
  Complex coeff(const ExponentVector& alpha) const { return coeffs_(monomial_index(alpha)); }
  double norm() const { return coeffs_.norm(); }

  HomogeneousForm operator+(const HomogeneousForm& o) const;
  HomogeneousForm operator-(const HomogeneousForm& o) const;
  HomogeneousForm operator*(Complex s) const;

  /// Coefficient vector rescaled by sqrt(multinomial) per monomial; the
  /// unitarily invariant coordinates of the form.
  CVector scaled_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void check_same_space(const HomogeneousForm& o) const;

  int num_vars_;
  int degree_;
  CVector coeffs_;
};

/// L = a_0 x_0 + ... + a_n x_n, not identically zero. Coordinates are stored
/// as given; normalized() yields the projective representative.
class LinearForm {
 public:
  explicit LinearForm(CVector coords);
  static LinearForm variable(int num_vars, int i);

  int num_vars() const { return static_cast<int>(coords_.size()); }
  const CVector& coords() const { return coords_; }
  Complex operator[](int i) const { return coords_(i); }

  /// Index of the first coordinate whose magnitude exceeds pivot * max|a_j|.
  int pivot_index(double pivot_tol = kDefaultTolerances.pivot) const;
  /// Value of the pivot coordinate; L = scale * normalized().
  Complex pivot_value(double pivot_tol = kDefaultTolerances.pivot) const;
  LinearForm normalized(double pivot_tol = kDefaultTolerances.pivot) const;

 private:
  CVector coords_;
};

/// A point of a projective space kept in its normalized representative.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const CVector& coords, double pivot_tol = kDefaultTolerances.pivot);
  const CVector& coords() const { return coords_; }

 private:
  CVector coords_;
};

struct Term {
  Complex weight;
  LinearForm form;
};

/// F = sum lambda_i L_i^d with nonzero weights, projectively distinct forms
/// and linearly independent powers L_i^d. The constructor enforces all three.
class Decomposition {
 public:
  Decomposition(int degree, std::vector<Term> terms, const Tolerances& tol = kDefaultTolerances);

  /// Reason the terms fail the invariants, or nullopt when they are valid.
  static std::optional<std::string> violation(int degree, const std::vector<Term>& terms,
                                              const Tolerances& tol = kDefaultTolerances);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(terms_.size()); }
  /// Number of variables of the forms; 0 for the empty decomposition.
  int num_vars() const { return terms_.empty() ? 0 : terms_.front().form.num_vars(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& operator[](int i) const { return terms_[static_cast<size_t>(i)]; }

 private:
  int degree_;
  std::vector<Term> terms_;
};

/// L^d; coefficient of x^alpha is multinomial(d; alpha) * prod a_j^alpha_j.
HomogeneousForm power_form(const LinearForm& l, int d);

/// sum lambda_i L_i^d as a form in num_vars variables.
HomogeneousForm synthesize(const Decomposition& dec, int num_vars);
HomogeneousForm synthesize(int degree, const std::vector<Term>& terms, int num_vars);

HomogeneousForm partial_derivative(const HomogeneousForm& f, int var);

/// x_var * F
HomogeneousForm multiply_by_variable(const HomogeneousForm& f, int var);

struct DerivativeSpan {
  std::vector<HomogeneousForm> derivatives;  // indexed by monomial_basis(n, order)
  int rank = 0;
};

/// All C(n+l, l) partial derivatives of order l and the dimension of their span.
DerivativeSpan derivative_span(const HomogeneousForm& f, int order,
                               const Tolerances& tol = kDefaultTolerances);

/// Normalized coordinates of [L^d] on the Veronese variety.
ProjectivePoint veronese(const LinearForm& l, int d, double pivot_tol = kDefaultTolerances.pivot);

/// Normalizes every form (absorbing the d-th power of the pivot into the weight)
/// and sorts the terms lexicographically on the real then imaginary parts of the
/// coordinates. Ties within 1e-9 fall through to the next coordinate.
Decomposition canonical_form(const Decomposition& dec, const Tolerances& tol = kDefaultTolerances);

/// Largest coordinatewise discrepancy between two decompositions after
/// canonical normalization and greedy nearest-term matching. Weights compare
/// relatively, normalized form coordinates absolutely. Infinity when the term
/// counts or degrees differ.
double decomposition_distance(const Decomposition& a, const Decomposition& b,
                              const Tolerances& tol = kDefaultTolerances);

/// ||F - synthesize(dec)|| / ||F|| (absolute when F = 0).
double relative_residual(const HomogeneousForm& f, const Decomposition& dec);

}  // namespace waring
