#include <cmath>
#include <vector>

#include "doctest.h"
#include "fellkit/error.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/subspace.hpp"

using namespace fellkit;

namespace {

CMatrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  CMatrix m(n, n);
  m.at(r, c) = Complex(1.0, 0.0);
  return m;
}

double gram_defect(const Subspace& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Complex g = hs_inner(s.basis()[i], s.basis()[j]);
      const Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(g - want));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("span orthonormalizes and drops dependent vectors") {
  Rng rng(5);
  const CMatrix a = rng.matrix(3, 3);
  const CMatrix b = rng.matrix(3, 3);
  const CMatrix c = Complex(2.0, -1.0) * a + b;  // dependent on {a, b}
  const Subspace s = Subspace::span(3, {a, b, c});
  CHECK(s.dim() == 2);
  CHECK(s.ambient_dim() == 3);
  CHECK(gram_defect(s) < 1e-12);
  CHECK(s.contains(a));
  CHECK(s.contains(c));
  CHECK(s.containment_defect(a) < 1e-10);
}

TEST_CASE("projection is idempotent, self-adjoint in coordinates, and tight") {
  Rng rng(7);
  const Subspace s = Subspace::span(4, {rng.matrix(4, 4), rng.matrix(4, 4),
                                        rng.matrix(4, 4)});
  const CMatrix x = rng.matrix(4, 4);
  const CMatrix p = s.project(x);
  CHECK((s.project(p) - p).max_abs() < 1e-12);
  // x − P(x) is orthogonal to the subspace.
  for (const CMatrix& e : s.basis()) {
    CHECK(std::abs(hs_inner(e, x - p)) < 1e-12);
  }
  // Coordinates reconstruct the projection.
  const std::vector<Complex> coeff = s.coordinates(x);
  CMatrix rebuilt(4, 4);
  for (std::size_t i = 0; i < s.dim(); ++i) rebuilt += coeff[i] * s.basis()[i];
  CHECK((rebuilt - p).max_abs() < 1e-12);
}

TEST_CASE("from_orthonormal keeps the basis bit-for-bit and validates it") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix e0(2, 2), e1(2, 2);
  e0.at(0, 0) = inv_sqrt2;
  e0.at(1, 1) = inv_sqrt2;
  e1.at(0, 1) = inv_sqrt2;
  e1.at(1, 0) = inv_sqrt2;
  const Subspace s = Subspace::from_orthonormal(2, {e0, e1});
  CHECK((s.basis()[0] - e0).max_abs() == 0.0);
  CHECK((s.basis()[1] - e1).max_abs() == 0.0);
  // A non-normalized vector is rejected.
  CHECK_THROWS_AS((void)Subspace::from_orthonormal(2, {2.0 * e0}), Error);
}

TEST_CASE("intersect: identical, nested, and generic subspaces") {
  Rng rng(11);
  const CMatrix a = rng.matrix(4, 4);
  const CMatrix b = rng.matrix(4, 4);
  const CMatrix c = rng.matrix(4, 4);
  const Subspace ab = Subspace::span(4, {a, b});
  const Subspace abc = Subspace::span(4, {a, b, c});

  const Subspace same = intersect(ab, ab);
  CHECK(same.dim() == 2);
  CHECK(same.equals(ab));

  const Subspace nested = intersect(ab, abc);
  CHECK(nested.dim() == 2);
  CHECK(nested.equals(ab));

  // Two generic 2-dim subspaces of the 16-dim ambient space are disjoint.
  const Subspace other = Subspace::span(4, {rng.matrix(4, 4), rng.matrix(4, 4)});
  CHECK(intersect(ab, other).dim() == 0);
}

TEST_CASE("intersect finds exactly the shared line") {
  Rng rng(13);
  const CMatrix shared = rng.matrix(5, 5);
  const Subspace s1 = Subspace::span(5, {shared, rng.matrix(5, 5)});
  const Subspace s2 = Subspace::span(5, {rng.matrix(5, 5), shared});
  const Subspace meet = intersect(s1, s2);
  REQUIRE(meet.dim() == 1);
  CHECK(meet.containment_defect(shared) < 1e-8 * shared.frobenius_norm());
  CHECK(gram_defect(meet) < 1e-12);
}

TEST_CASE("intersect with an empty side is empty and checks ambient dims") {
  const Subspace empty(3);
  const Subspace line = Subspace::span(3, {unit_matrix(3, 0, 0)});
  CHECK(intersect(empty, line).dim() == 0);
  CHECK(intersect(line, empty).dim() == 0);
  const Subspace wrong = Subspace::span(2, {unit_matrix(2, 0, 0)});
  CHECK_THROWS_AS((void)intersect(line, wrong), Error);
}

TEST_CASE("kernel_vectors and numeric_rank agree with a constructed kernel") {
  // 3×3 map with rank 2: columns c0, c1, c0 + c1.
  Rng rng(17);
  CMatrix map(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    const Complex c0 = rng.box();
    const Complex c1 = rng.box();
    map.at(r, 0) = c0;
    map.at(r, 1) = c1;
    map.at(r, 2) = c0 + c1;
  }
  CHECK(numeric_rank(map) == 2);
  const auto kernel = kernel_vectors(map);
  REQUIRE(kernel.size() == 1);
  // The kernel vector is proportional to (1, 1, −1).
  std::vector<Complex> image(3, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) image[r] += map.at(r, c) * kernel[0][c];
  }
  for (const Complex& v : image) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("solve_nullspace returns matrices annihilated by the map") {
  // Commutant of diag(1, 2) inside M_2: diagonal matrices. The map is
  // X ↦ DX − XD on the row-major vectorization.
  CMatrix map(4, 4);
  const double d[2] = {1.0, 2.0};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      map.at(2 * i + j, 2 * i + j) = Complex(d[i] - d[j], 0.0);
    }
  }
  const Subspace commutant = solve_nullspace(map);
  CHECK(commutant.dim() == 2);
  CHECK(commutant.contains(CMatrix::identity(2)));
  CHECK_FALSE(commutant.contains(unit_matrix(2, 0, 1)));
}

TEST_CASE("closure_tables recovers structure constants of a matrix algebra") {
  // Diagonal algebra in M_2 with orthonormal basis {E00, E11}.
  const Subspace diag =
      Subspace::from_orthonormal(2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)});
  std::vector<CMatrix> mult;
  CMatrix star;
  closure_tables(diag, 1e-9, &mult, &star);
  REQUIRE(mult.size() == 2);
  // E00·E00 = E00, E00·E11 = 0, E11·E11 = E11; both are self-adjoint.
  CHECK(std::abs(mult[0].at(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(mult[0].at(1, 0)) < 1e-12);
  CHECK(std::abs(mult[0].at(1, 1)) < 1e-12);
  CHECK(std::abs(mult[1].at(1, 1) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(star.at(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(star.at(0, 1)) < 1e-12);

  // A subspace that is not multiplicatively closed is rejected.
  const Subspace open_line = Subspace::span(2, {unit_matrix(2, 0, 1)});
  CHECK_THROWS_AS(closure_tables(open_line, 1e-9, &mult, &star), Error);
}
