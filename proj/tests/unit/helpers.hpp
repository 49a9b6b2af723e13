#pragma once

#include <complex>
#include <initializer_list>

#include "waring/poly.hpp"

namespace testing {

using waring::Complex;
using waring::CVector;

inline const Complex I{0.0, 1.0};

inline CVector vec(std::initializer_list<Complex> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) v(i++) = x;
  return v;
}

inline waring::HomogeneousForm form(int n, int d, std::initializer_list<Complex> xs) {
  return {n + 1, d, vec(xs)};
}

inline waring::LinearForm lin(std::initializer_list<Complex> xs) { return waring::LinearForm(vec(xs)); }

inline double gap(const CVector& a, const CVector& b) { return (a - b).norm(); }

}  // namespace testing
