#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "waring/linalg.hpp"
#include "waring/random.hpp"
#include "waring/roots.hpp"

using namespace waring;
using namespace testing;

namespace {

Complex eval_binary(const CVector& c, const CVector& p) {
  const int h = static_cast<int>(c.size()) - 1;
  Complex s = 0.0;
  for (int k = 0; k <= h; ++k) s += c(k) * std::pow(p(0), h - k) * std::pow(p(1), k);
  return s;
}

}  // namespace

TEST_CASE("polynomial roots") {
  // (s - 1)(s - 2)(s + 3) = s^3 - 7s + 6
  auto roots = polynomial_roots({6.0, -7.0, 0.0, 1.0});
  REQUIRE(roots.size() == 3);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  CHECK(std::abs(roots[0] - Complex(-3.0)) < 1e-12);
  CHECK(std::abs(roots[1] - Complex(1.0)) < 1e-12);
  CHECK(std::abs(roots[2] - Complex(2.0)) < 1e-12);
  CHECK(polynomial_roots({5.0}).empty());
  CHECK_THROWS_AS(polynomial_roots({1.0, 0.0}), Error);
}

TEST_CASE("binary form roots, including infinity") {
  // xi0 * xi1: roots [0:1] and [1:0]
  const auto r = binary_form_roots(vec({0.0, 1.0, 0.0}));
  REQUIRE(r.size() == 2);
  for (const auto& p : r) CHECK(std::abs(eval_binary(vec({0.0, 1.0, 0.0}), p)) < 1e-12);
  CHECK(std::min(linalg::chordal_distance(r[0], vec({1.0, 0.0})), linalg::chordal_distance(r[1], vec({1.0, 0.0}))) <
        1e-12);

  CHECK_THROWS_AS(binary_form_roots(vec({1.0, 0.0, 0.0})), Error);  // xi0^2... double root
  CHECK_THROWS_AS(binary_form_roots(vec({0.0, 0.0, 1.0})), Error);  // xi1^2: double root at infinity
  CHECK_THROWS_AS(binary_form_roots(vec({1.0, 2.0, 1.0})), Error);  // (xi0 + xi1)^2

  for (int h = 1; h <= 8; ++h) {
    const CVector c = ComplexGaussian(derive_seed(60, h)).vector(h + 1);
    const auto roots = binary_form_roots(c);
    REQUIRE(static_cast<int>(roots.size()) == h);
    for (const auto& p : roots) CHECK(std::abs(eval_binary(c, p)) < 1e-9 * c.norm());
  }
}

TEST_CASE("conic matrix") {
  // x0^2 + 2 x0 x1 + 3 x2^2
  const Eigen::Matrix3cd s = conic_matrix(vec({1.0, 2.0, 0.0, 0.0, 0.0, 3.0}));
  CHECK(s(0, 0) == Complex(1.0));
  CHECK(s(0, 1) == Complex(1.0));
  CHECK(s(1, 0) == Complex(1.0));
  CHECK(s(2, 2) == Complex(3.0));
  CHECK(s(1, 1) == Complex(0.0));
}

TEST_CASE("conic intersections") {
  for (int trial = 0; trial < 20; ++trial) {
    ComplexGaussian rng(derive_seed(61, trial));
    const Eigen::Matrix3cd s1 = conic_matrix(rng.vector(6)), s2 = conic_matrix(rng.vector(6));
    const auto pts = intersect_conics(s1, s2);
    REQUIRE(pts.size() == 4);
    for (const auto& p : pts) {
      const double np = p.squaredNorm();
      CHECK(std::abs((p.transpose() * s1 * p).value()) < 1e-9 * np * s1.norm());
      CHECK(std::abs((p.transpose() * s2 * p).value()) < 1e-9 * np * s2.norm());
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(linalg::chordal_distance(pts[size_t(i)], pts[size_t(j)]) > 1e-6);
  }
  // Two conics tangent at [0:0:1]... x0 x1 = 0 and x0^2 = 0 share a line: rejected.
  Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero(), b = Eigen::Matrix3cd::Zero();
  a(0, 1) = a(1, 0) = 0.5;
  b(0, 0) = 1.0;
  CHECK_THROWS_AS(intersect_conics(a, b), Error);
}
