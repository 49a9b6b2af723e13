#include "waring/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "waring/linalg.hpp"
#include "waring/random.hpp"

namespace waring {

namespace {

Complex horner(const std::vector<Complex>& c, Complex s) {
  Complex v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex s) {
  Complex v = 0.0;
  for (size_t k = c.size() - 1; k >= 1; --k) v = v * s + static_cast<double>(k) * c[k];
  return v;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  require(deg >= 0, "polynomial_roots needs at least one coefficient");
  if (deg == 0) return {};
  require(std::abs(coeffs.back()) > 0.0, "polynomial_roots: leading coefficient is zero");
  CMatrix comp = CMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
  Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
  if (es.info() != Eigen::Success) fail(ErrorKind::Rejected, "companion eigenvalue iteration did not converge");
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex dp = horner_derivative(coeffs, r);
      if (std::abs(dp) == 0.0) break;
      const Complex step = horner(coeffs, r) / dp;
      const Complex cand = r - step;
      if (std::abs(horner(coeffs, cand)) >= std::abs(horner(coeffs, r))) break;
      r = cand;
    }
  }
  return roots;
}

std::vector<CVector> binary_form_roots(const CVector& coeffs, const Tolerances& tol) {
  const int h = static_cast<int>(coeffs.size()) - 1;
  require(h >= 1, "binary form must have positive degree");
  const double mx = coeffs.cwiseAbs().maxCoeff();
  if (mx == 0.0) fail(ErrorKind::Rejected, "binary form is identically zero");
  // phi(s, 1) = sum_k c_{(k, h-k)} s^k; index of (k, h-k) is h - k.
  int at_infinity = 0;
  while (at_infinity <= h && std::abs(coeffs(at_infinity)) < tol.rank * mx) ++at_infinity;
  if (at_infinity > 1) fail(ErrorKind::Rejected, "binary form has a repeated root at infinity");

  std::vector<CVector> pts;
  if (at_infinity == 1) {
    CVector p(2);
    p << 1.0, 0.0;
    pts.push_back(p);
  }
  const int deg = h - at_infinity;
  std::vector<Complex> poly(static_cast<size_t>(deg + 1));
  for (int k = 0; k <= deg; ++k) poly[static_cast<size_t>(k)] = coeffs(h - k);
  for (const Complex& s : polynomial_roots(poly)) {
    CVector p(2);
    p << s, 1.0;
    pts.push_back(p);
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (linalg::chordal_distance(pts[i], pts[j]) <= tol.distinct)
        fail(ErrorKind::Rejected, "binary form has a repeated root");
  return pts;
}

// ---------------------------------------------------------------------------

Eigen::Matrix3cd conic_matrix(const CVector& c) {
  require(c.size() == 6, "a plane conic has 6 coefficients");
  // Order: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
  Eigen::Matrix3cd s;
  s << c(0), c(1) / 2.0, c(2) / 2.0,  //
      c(1) / 2.0, c(3), c(4) / 2.0,   //
      c(2) / 2.0, c(4) / 2.0, c(5);
  return s;
}

namespace {

using Poly = std::vector<Complex>;  // low to high

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Poly scale(const Poly& a, Complex s) {
  Poly r(a);
  for (auto& v : r) v *= s;
  return r;
}

struct AffineConic {
  // q(x, y) = a x^2 + (b1 y + b0) x + (c2 y^2 + c1 y + c0)
  Complex a;
  Poly b;
  Poly c;
};

AffineConic affine(const Eigen::Matrix3cd& s) {
  return {s(0, 0), {2.0 * s(0, 2), 2.0 * s(0, 1)}, {s(2, 2), 2.0 * s(1, 2), s(1, 1)}};
}

Complex eval_q(const AffineConic& q, Complex x, Complex y) {
  return q.a * x * x + horner(q.b, y) * x + horner(q.c, y);
}

Eigen::Vector2cd grad_q(const AffineConic& q, Complex x, Complex y) {
  Eigen::Vector2cd g;
  g(0) = 2.0 * q.a * x + horner(q.b, y);
  g(1) = q.b[1] * x + horner_derivative(q.c, y);
  return g;
}

double conic_residual(const Eigen::Matrix3cd& s, const Eigen::Vector3cd& p) {
  const Complex v = p.transpose() * s * p;
  return std::abs(v) / (s.norm() * p.squaredNorm());
}

// One elimination pass in coordinates fixed by the unitary t. Returns the
// refined points (possibly fewer than four on failure).
std::vector<Eigen::Vector3cd> intersect_once(const Eigen::Matrix3cd& s1, const Eigen::Matrix3cd& s2,
                                             const Eigen::Matrix3cd& t) {
  const Eigen::Matrix3cd m1 = t.transpose() * s1 * t;
  const Eigen::Matrix3cd m2 = t.transpose() * s2 * t;
  const AffineConic q1 = affine(m1 / m1.norm());
  const AffineConic q2 = affine(m2 / m2.norm());

  // Res_x(q1, q2) = (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).
  const Poly ac = sub(scale(q2.c, q1.a), scale(q1.c, q2.a));
  const Poly ab = sub(scale(q2.b, q1.a), scale(q1.b, q2.a));
  const Poly bc = sub(mul(q1.b, q2.c), mul(q2.b, q1.c));
  Poly res = sub(mul(ac, ac), mul(ab, bc));
  res.resize(5, 0.0);
  double mx = 0.0;
  for (const auto& v : res) mx = std::max(mx, std::abs(v));
  // Both conics have unit norm, so a resultant this small means a shared component.
  if (mx < 1e-10 || std::abs(res[4]) < 1e-10 * mx) return {};

  std::vector<Eigen::Vector3cd> out;
  for (const Complex& y0 : polynomial_roots(res)) {
    // a2 q1 - a1 q2 is linear in x.
    const Complex lin = q2.a * horner(q1.b, y0) - q1.a * horner(q2.b, y0);
    const Complex cst = q2.a * horner(q1.c, y0) - q1.a * horner(q2.c, y0);
    Complex x0;
    const double scale_lin = std::abs(q1.a) + std::abs(q2.a);
    if (std::abs(lin) > 1e-8 * scale_lin * (1.0 + std::abs(y0))) {
      x0 = -cst / lin;
    } else {
      // Fall back to the roots of q1 in x, keeping the one closest to q2 = 0.
      const Complex b = horner(q1.b, y0), c = horner(q1.c, y0);
      const Complex disc = std::sqrt(b * b - 4.0 * q1.a * c);
      const Complex r1 = (-b + disc) / (2.0 * q1.a), r2 = (-b - disc) / (2.0 * q1.a);
      x0 = std::abs(eval_q(q2, r1, y0)) < std::abs(eval_q(q2, r2, y0)) ? r1 : r2;
    }
    Complex x = x0, y = y0;
    auto resid = [&](Complex xx, Complex yy) {
      return std::hypot(std::abs(eval_q(q1, xx, yy)), std::abs(eval_q(q2, xx, yy)));
    };
    for (int it = 0; it < 8; ++it) {
      const double r0 = resid(x, y);
      if (r0 == 0.0) break;
      Eigen::Matrix2cd jac;
      jac.row(0) = grad_q(q1, x, y).transpose();
      jac.row(1) = grad_q(q2, x, y).transpose();
      const Eigen::Vector2cd rhs(eval_q(q1, x, y), eval_q(q2, x, y));
      const Eigen::Vector2cd step = jac.fullPivLu().solve(rhs);
      if (!step.allFinite()) break;
      double damp = 1.0;
      bool improved = false;
      for (int k = 0; k < 6; ++k, damp *= 0.5) {
        if (resid(x - damp * step(0), y - damp * step(1)) < r0) {
          x -= damp * step(0);
          y -= damp * step(1);
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    out.push_back(t * Eigen::Vector3cd(x, y, 1.0));
  }
  return out;
}

}  // namespace

std::vector<Eigen::Vector3cd> intersect_conics(const Eigen::Matrix3cd& s1, const Eigen::Matrix3cd& s2,
                                               const Tolerances& tol) {
  require(s1.norm() > 0.0 && s2.norm() > 0.0, "intersect_conics: zero conic");
  std::string why = "no attempt";
  for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
    const Eigen::Matrix3cd t = random_unitary(3, derive_seed(0x636f6e6963ULL, attempt));
    std::vector<Eigen::Vector3cd> pts = intersect_once(s1, s2, t);
    if (pts.size() != 4) {
      why = "the pencil of conics is not transverse (fewer than 4 solutions)";
      continue;
    }
    bool ok = true;
    for (auto& p : pts) {
      p /= p.norm();
      if (conic_residual(s1, p) > tol.residual || conic_residual(s2, p) > tol.residual) {
        ok = false;
        why = "intersection point fails the conic equations";
      }
    }
    for (size_t i = 0; ok && i < pts.size(); ++i)
      for (size_t j = i + 1; ok && j < pts.size(); ++j)
        if (linalg::chordal_distance(pts[i], pts[j]) <= tol.distinct) {
          ok = false;
          why = "conics meet non-transversally (repeated intersection point)";
        }
    if (ok) return pts;
  }
  fail(ErrorKind::Rejected, "conic intersection rejected: " + why);
}

}  // namespace waring
