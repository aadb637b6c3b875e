#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/section.hpp"

using namespace fellkit;

namespace {

BundlePtr bundle_of(const std::string& spec) {
  return std::make_shared<FellBundle>(builtin_bundle_by_name(spec));
}

// The worked two-element example used as a frozen reference throughout:
// over the group bundle of C2 (inside M_2), take ξ(e) = 2λ_e, ξ(g) = λ_g.
Section reference_section(const BundlePtr& b) {
  const std::vector<CMatrix> lam = left_regular(b->group);
  return make_section(b, {2.0 * lam[0], lam[1]});
}

}  // namespace

TEST_CASE("convolution, involution, and inner product: frozen two-point values") {
  const BundlePtr b = bundle_of("group:c2");
  const Section xi = reference_section(b);
  const std::vector<CMatrix> lam = left_regular(b->group);

  // (ξ∗ξ)(e) = ξ(e)² + ξ(g)² = 5λ_e and (ξ∗ξ)(g) = 2·2λ_g = 4λ_g.
  const Section sq = convolve(xi, xi);
  CHECK((sq.value(0) - 5.0 * lam[0]).max_abs() < 1e-12);
  CHECK((sq.value(1) - 4.0 * lam[1]).max_abs() < 1e-12);

  const Section star = involute(xi);
  CHECK((star.value(0) - xi.value(0)).max_abs() == 0.0);
  CHECK((star.value(1) - xi.value(1)).max_abs() == 0.0);

  const CMatrix inner = l2_inner(xi, xi);
  CHECK((inner - 5.0 * CMatrix::identity(2)).max_abs() < 1e-12);
  CHECK(l1_norm(xi) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("coaction embedding of the reference section is the frozen matrix") {
  const BundlePtr b = bundle_of("group:c2");
  const Section xi = reference_section(b);
  const CMatrix rho = coaction_embedding(xi);
  REQUIRE(rho.rows() == 4);
  const double want[4][4] = {
      {2, 0, 0, 1}, {0, 2, 1, 0}, {0, 1, 2, 0}, {1, 0, 0, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(rho.at(i, j) - Complex(want[i][j], 0.0)) < 1e-12);
    }
  }
  CHECK(op_norm(rho) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("embedding is a *-homomorphism for convolution and involution") {
  const BundlePtr b = bundle_of("semidirect:s3");
  Rng rng(23);
  const Section x = random_section(rng, b);
  const Section y = random_section(rng, b);
  const CMatrix rx = coaction_embedding(x);
  const CMatrix ry = coaction_embedding(y);
  const double scale = 1.0 + rx.frobenius_norm() * ry.frobenius_norm();
  CHECK((coaction_embedding(convolve(x, y)) - rx * ry).frobenius_norm() /
            scale <
        1e-11);
  CHECK((coaction_embedding(involute(x)) - rx.adjoint()).frobenius_norm() <
        1e-11 * (1.0 + rx.frobenius_norm()));
}

TEST_CASE("regular model: isometry columns orthonormal, same operator norm") {
  for (const char* spec : {"group:c4", "semidirect:c2", "partial:s3"}) {
    const BundlePtr b = bundle_of(spec);
    CAPTURE(spec);
    const RegularModel model = regular_model(b);
    const CMatrix v = model.isometry;
    CHECK((v.adjoint() * v - CMatrix::identity(v.cols())).max_abs() < 1e-10);
    std::size_t total = 0;
    for (std::size_t d : model.block_dims) total += d;
    CHECK(total == v.cols());

    Rng rng(31);
    const Section xi = random_section(rng, b);
    const double via_embedding = op_norm(coaction_embedding(xi));
    const double via_regular = op_norm(regular_representation(model, xi));
    CHECK(std::abs(via_embedding - via_regular) < 1e-8 * (1.0 + via_embedding));
  }
}

TEST_CASE("make_section rejects values outside the stated fiber") {
  const BundlePtr b = bundle_of("group:c2");
  const std::vector<CMatrix> lam = left_regular(b->group);
  // λ_g placed at the identity slot is off-fiber.
  try {
    (void)make_section(b, {lam[1], lam[1]});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FiberViolation);
  }
  CHECK_NOTHROW((void)delta_section(b, 1, lam[1]));
  CHECK_THROWS_AS((void)delta_section(b, 0, lam[1]), Error);
}

TEST_CASE("build_algebra spans dim = total bundle dimension with one generator per basis element") {
  for (const char* spec : {"group:v4", "semidirect:c2", "partial:c2"}) {
    const BundlePtr b = bundle_of(spec);
    CAPTURE(spec);
    const BundleAlgebra alg = build_algebra(b);
    CHECK(alg.rep_dim == b->ambient_dim * static_cast<std::size_t>(
                                              b->group.order()));
    CHECK(alg.algebra.dim() == b->total_dim());
    CHECK(alg.generators.size() == b->total_dim());
    for (std::size_t i = 0; i < alg.generators.size(); ++i) {
      const auto [t, k] = alg.generator_index[i];
      CHECK(alg.generator_at(t, k) == i);
      // Generator i is the embedded basis element b_k ⊗ λ_t.
      const CMatrix want =
          kron(b->fiber(t).basis()[k], left_regular(b->group)[
                                           static_cast<std::size_t>(t)]);
      CHECK((alg.generators[i] - want).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("build_algebra refuses a grading that breaks the axioms") {
  const BundlePtr bad =
      std::make_shared<FellBundle>(involution_counterexample());
  try {
    (void)build_algebra(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AxiomFailure);
    CHECK(std::string(e.what()).find("Axiom.i.involution") !=
          std::string::npos);
  }
}

TEST_CASE("integrated forms of the inclusion and generator representations") {
  const BundlePtr b = bundle_of("group:c3");
  const BundleAlgebra alg = build_algebra(b);
  const BundleRep incl = inclusion_rep(b);
  const BundleRep gen = generator_rep(alg);
  CHECK_NOTHROW(validate_bundle_rep(incl));
  CHECK_NOTHROW(validate_bundle_rep(gen));
  CHECK(bundle_rep_nondegenerate(incl));

  const std::vector<CMatrix> lam = left_regular(b->group);
  const Section xi = make_section(
      b, {2.0 * lam[0], Complex(0.0, 1.0) * lam[1], -1.0 * lam[2]});
  // Inclusion integrates to the plain sum of values; the generator rep
  // integrates to ρ.
  CMatrix plain(b->ambient_dim, b->ambient_dim);
  for (const CMatrix& v : xi.values) plain += v;
  CHECK((integrated_form(incl, xi) - plain).max_abs() < 1e-12);
  CHECK((integrated_form(gen, xi) - coaction_embedding(xi)).max_abs() < 1e-12);
}
