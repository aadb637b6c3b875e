#include <cmath>

#include "doctest.h"
#include "fellkit/complex_matrix.hpp"
#include "fellkit/error.hpp"
#include "fellkit/rng.hpp"

using namespace fellkit;

namespace {

CMatrix from_rows(std::size_t n, std::initializer_list<double> entries) {
  CMatrix m(n, n);
  std::size_t i = 0;
  for (double v : entries) m[i++] = Complex(v, 0.0);
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic and adjoint") {
  CMatrix a = from_rows(2, {1, 2, 3, 4});
  CMatrix b = from_rows(2, {0, 1, 1, 0});
  CHECK((a * b - from_rows(2, {2, 1, 4, 3})).max_abs() == 0.0);
  CHECK((a + b - from_rows(2, {1, 3, 4, 4})).max_abs() == 0.0);
  CHECK(a.trace() == Complex(5.0, 0.0));

  CMatrix c(2, 2);
  c.at(0, 1) = Complex(1.0, 2.0);
  CMatrix cs = c.adjoint();
  CHECK(cs.at(1, 0) == Complex(1.0, -2.0));
  CHECK(cs.at(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("hilbert-schmidt inner product is conjugate-linear in the first slot") {
  Rng rng(7);
  const CMatrix x = rng.matrix(3, 3);
  const CMatrix y = rng.matrix(3, 3);
  const Complex z(0.5, -2.0);
  CHECK(std::abs(hs_inner(z * x, y) - std::conj(z) * hs_inner(x, y)) < 1e-12);
  CHECK(std::abs(hs_inner(x, z * y) - z * hs_inner(x, y)) < 1e-12);
  // ⟨x|y⟩ = tr(x* y)
  CHECK(std::abs(hs_inner(x, y) - (x.adjoint() * y).trace()) < 1e-12);
}

TEST_CASE("kron shapes and mixed-product rule") {
  Rng rng(11);
  const CMatrix a = rng.matrix(2, 2), b = rng.matrix(3, 3);
  const CMatrix c = rng.matrix(2, 2), d = rng.matrix(3, 3);
  const CMatrix lhs = kron(a, b) * kron(c, d);
  const CMatrix rhs = kron(a * c, b * d);
  CHECK(kron(a, b).rows() == 6);
  CHECK((lhs - rhs).max_abs() < 1e-12);
}

TEST_CASE("hermitian eigenvalues of a fixed 2x2") {
  const CMatrix m = from_rows(2, {2, 1, 1, 2});
  HermEig eig = herm_eig(m);
  REQUIRE(eig.eigenvalues.size() == 2);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  // Residual of each eigenpair.
  for (std::size_t k = 0; k < 2; ++k) {
    CMatrix v(2, 1);
    v.at(0, 0) = eig.eigenvectors.at(0, k);
    v.at(1, 0) = eig.eigenvectors.at(1, k);
    const CMatrix r = m * v - eig.eigenvalues[k] * v;
    CHECK(r.max_abs() < 1e-12);
  }
}

TEST_CASE("hermitian eigendecomposition reconstructs random matrices") {
  Rng rng(3);
  for (std::size_t n : {4, 9, 17}) {
    const CMatrix h = rng.hermitian(n);
    HermEig eig = herm_eig(h);
    CMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          rebuilt.at(i, j) += eig.eigenvalues[k] * eig.eigenvectors.at(i, k) *
                              std::conj(eig.eigenvectors.at(j, k));
        }
      }
    }
    CHECK((rebuilt - h).frobenius_norm() < 1e-10 * (1.0 + h.frobenius_norm()));
  }
}

TEST_CASE("operator norm on matrices with known singular values") {
  CHECK(op_norm(from_rows(2, {3, 0, 0, 1})) == doctest::Approx(3.0));
  // Nilpotent: largest singular value is the off-diagonal magnitude.
  CHECK(op_norm(from_rows(2, {0, 2, 0, 0})) == doctest::Approx(2.0));
  CHECK(op_norm(CMatrix(3, 3)) == 0.0);
}

TEST_CASE("operator norm agrees across the small and large code paths") {
  // Above the crossover the norm comes from an iterative Gram solver; check
  // it against the dense eigenvalue route on the same matrix.
  Rng rng(21);
  for (std::size_t n : {50, 56, 63, 70}) {
    const CMatrix m = rng.matrix(n, n);
    const double fast = op_norm(m);
    HermEig eig = herm_eig(m.adjoint() * m, /*want_vectors=*/false);
    const double dense = std::sqrt(std::max(0.0, eig.eigenvalues.back()));
    CHECK(std::abs(fast - dense) <= 1e-11 * (1.0 + dense));
  }
}

TEST_CASE("psd detection and square root") {
  Rng rng(5);
  const CMatrix a = rng.matrix(4, 4);
  const CMatrix psd = a.adjoint() * a;
  CHECK(is_psd(psd));
  CHECK_FALSE(is_psd(psd - 10.0 * CMatrix::identity(4)));
  const CMatrix r = psd_sqrt(psd);
  CHECK((r - r.adjoint()).max_abs() < 1e-10);
  CHECK((r * r - psd).frobenius_norm() < 1e-9 * (1.0 + psd.frobenius_norm()));
}

TEST_CASE("hermitian_defect measures distance from self-adjointness") {
  CHECK(from_rows(2, {1, 0, 0, 2}).hermitian_defect() == 0.0);
  CMatrix m(2, 2);
  m.at(0, 1) = Complex(0.0, 1.0);
  m.at(1, 0) = Complex(0.0, 1.0);  // adjoint flips the sign
  CHECK(m.hermitian_defect() > 0.5);
}

TEST_CASE("dimension mismatches are rejected") {
  CMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS((void)(a * b), Error);
  CHECK_THROWS_AS((void)hs_inner(CMatrix(2, 2), CMatrix(3, 3)), Error);
}
