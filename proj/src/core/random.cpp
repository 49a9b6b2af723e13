#include "waring/random.hpp"

#include <cmath>

namespace waring {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex ComplexGaussian::operator()() {
  const double a = normal_(engine_);
  const double b = normal_(engine_);
  return Complex(a, b) / std::sqrt(2.0);
}

CVector ComplexGaussian::vector(int size) {
  CVector v(size);
  for (int i = 0; i < size; ++i) v(i) = (*this)();
  return v;
}

HomogeneousForm random_form(int n, int d, std::uint64_t seed) {
  require(n >= 0 && d >= 0, "random_form needs n >= 0 and d >= 0");
  ComplexGaussian g(seed);
  return {n + 1, d, g.vector(num_monomials(n, d))};
}

LinearForm random_linear_form(int n, std::uint64_t seed) {
  ComplexGaussian g(seed);
  return LinearForm(g.vector(n + 1));
}

Decomposition random_decomposition(int n, int d, int h, std::uint64_t seed, const Tolerances& tol) {
  require(h >= 1, "random_decomposition needs h >= 1");
  require(d >= 1, "random_decomposition needs d >= 1");
  if (h > num_monomials(n, d))
    fail(ErrorKind::Precondition, "h exceeds C(n+d,d): the powers cannot be linearly independent");
  for (std::uint64_t attempt = 0;; ++attempt) {
    ComplexGaussian g(attempt == 0 ? seed : derive_seed(seed, attempt));
    std::vector<Term> terms;
    terms.reserve(static_cast<size_t>(h));
    for (int i = 0; i < h; ++i) {
      const Complex w = g();
      terms.push_back({w, LinearForm(g.vector(n + 1))});
    }
    if (!Decomposition::violation(d, terms, tol)) return Decomposition(d, std::move(terms), tol);
    if (attempt > 64) fail(ErrorKind::Internal, "could not sample a valid decomposition");
  }
}

CMatrix random_unitary(int size, std::uint64_t seed) {
  ComplexGaussian g(seed);
  CMatrix a(size, size);
  for (int j = 0; j < size; ++j) a.col(j) = g.vector(size);
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(size, size);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < size; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace waring
