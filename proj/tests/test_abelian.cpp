#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fellkit/dual_action.hpp"
#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/rng.hpp"

using namespace fellkit;

namespace {

Coaction abelian_fixture(const std::string& group, const std::string& kind) {
  const BundlePtr b =
      std::make_shared<FellBundle>(builtin_bundle(group, kind));
  return dual_coaction(build_algebra(b));
}

}  // namespace

TEST_CASE("coaction ↔ action round trips on every abelian fixture") {
  const std::vector<std::pair<std::string, std::string>> abelian_cases = {
      {"c2", "group"},     {"c3", "group"},   {"c4", "group"},
      {"v4", "group"},     {"c2", "semidirect"}, {"v4", "semidirect"},
      {"c2", "partial"}};
  for (const auto& [group, kind] : abelian_cases) {
    const Coaction c = abelian_fixture(group, kind);
    CAPTURE(c.label);
    const DualAction act = action_from_coaction(c);
    CHECK_NOTHROW(validate_dual_action(act, 1e-9));

    // Rebuilding the coaction from spectral elements returns the original,
    // coefficient for coefficient.
    const Coaction back = coaction_from_action(act);
    REQUIRE(back.kappa.size() == c.kappa.size());
    for (std::size_t j = 0; j < c.kappa.size(); ++j) {
      CHECK((back.kappa[j] - c.kappa[j]).max_abs() < 1e-10);
    }

    // And the action survives its own round trip.
    const DualAction again = action_from_coaction(back);
    REQUIRE(again.maps.size() == act.maps.size());
    for (std::size_t x = 0; x < act.maps.size(); ++x) {
      CHECK((again.maps[x] - act.maps[x]).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("spectral elements of the action equal the Fourier coefficients") {
  const Coaction c = abelian_fixture("v4", "semidirect");
  const DualAction act = action_from_coaction(c);
  Rng rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix a = random_element(rng, c.algebra);
    for (int t = 0; t < c.group.order(); ++t) {
      CHECK((spectral_element(act, a, t) - fourier_coeff(c, a, t)).max_abs() <
            1e-10);
    }
  }
}

TEST_CASE("joint eigenspaces equal spectral subspaces equal bundle fibers") {
  const BundlePtr b =
      std::make_shared<FellBundle>(builtin_bundle("c4", "group"));
  const BundleAlgebra alg = build_algebra(b);
  const Coaction c = dual_coaction(alg);
  const DualAction act = action_from_coaction(c);
  for (int t = 0; t < c.group.order(); ++t) {
    const Subspace from_coaction = spectral_subspace(c, t);
    const Subspace from_action = spectral_subspace_action(act, t);
    CHECK(from_coaction.dim() == from_action.dim());
    CHECK(from_coaction.equals(from_action, 1e-8));
    CHECK(from_coaction.dim() == b->fiber(t).dim());
  }
}

TEST_CASE("conjugation by diag(1,−1): frozen spectral data on full M_2") {
  const DualAction act = ad_sign_action();
  CHECK_NOTHROW(validate_dual_action(act));
  CMatrix e01(2, 2), e00(2, 2);
  e01.at(0, 1) = 1.0;
  e00.at(0, 0) = 1.0;
  // E01 changes sign under the conjugation: pure frequency 1; diagonal
  // matrices are fixed: pure frequency 0.
  CHECK((spectral_element(act, e01, 1) - e01).max_abs() < 1e-12);
  CHECK(spectral_element(act, e01, 0).max_abs() < 1e-12);
  CHECK((spectral_element(act, e00, 0) - e00).max_abs() < 1e-12);
  CHECK(spectral_element(act, e00, 1).max_abs() < 1e-12);
  CHECK(spectral_subspace_action(act, 0).dim() == 2);
  CHECK(spectral_subspace_action(act, 1).dim() == 2);
}

TEST_CASE("reconstruction from the sign conjugation yields a two-fiber bundle") {
  const auto [bundle, cert] = reconstruct_bundle(ad_sign_action());
  CHECK(cert.pass());
  CHECK(bundle.group.order() == 2);
  CHECK(bundle.fiber(0).dim() == 2);
  CHECK(bundle.fiber(1).dim() == 2);
  CHECK(check_bundle_axioms(bundle).pass());
}

TEST_CASE("reconstruction inverts the dual coaction on abelian fixtures") {
  for (const char* spec : {"group:v4", "semidirect:c2", "partial:c2"}) {
    const FellBundle original = builtin_bundle_by_name(spec);
    const BundlePtr b = std::make_shared<FellBundle>(original);
    const Coaction c = dual_coaction(build_algebra(b));
    CAPTURE(spec);
    const auto [rebuilt, cert] = reconstruct_bundle(action_from_coaction(c));
    CHECK(cert.pass());
    REQUIRE(rebuilt.group.order() == original.group.order());
    for (int t = 0; t < original.group.order(); ++t) {
      CHECK(rebuilt.fiber(t).dim() == original.fiber(t).dim());
    }
  }
}

TEST_CASE("random inner actions of the dual of v4 on M_4 reconstruct cleanly") {
  const FiniteGroup v4 = builtin_group("v4");
  const DualGroup dual = dual_group(v4);
  const Subspace full = Subspace::span(
      4, [] {
        std::vector<CMatrix> units;
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = 0; j < 4; ++j) {
            CMatrix e(4, 4);
            e.at(i, j) = 1.0;
            units.push_back(e);
          }
        }
        return units;
      }());
  REQUIRE(full.dim() == 16);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const CMatrix w = rng.unitary(4);
    // u_x = W·diag(⟨x, t_i⟩)·W* is a multiplicative family because the
    // characters multiply pointwise over the fixed eigenbasis.
    std::vector<CMatrix> unitaries;
    for (int x = 0; x < v4.order(); ++x) {
      CMatrix d(4, 4);
      for (int i = 0; i < 4; ++i) {
        d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            dual.pairing(x, i);
      }
      unitaries.push_back(w * d * w.adjoint());
    }
    const DualAction act = inner_dual_action(dual, full, unitaries);
    CAPTURE(seed);
    CHECK_NOTHROW(validate_dual_action(act, 1e-8));
    const auto [bundle, cert] = reconstruct_bundle(act, 1e-8);
    CHECK(cert.pass());
    std::size_t total = 0;
    for (const Subspace& f : bundle.fibers) total += f.dim();
    CHECK(total == 16);
  }
}

TEST_CASE("a coordinate map that is not an action is caught both ways") {
  const Coaction c = abelian_fixture("c2", "group");
  DualAction act = action_from_coaction(c);
  act.maps[1] = 0.5 * act.maps[1];  // no longer an automorphism
  CHECK_THROWS_AS(validate_dual_action(act), Error);
  try {
    (void)reconstruct_bundle(act);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpectralGapFailure);
  }
}

TEST_CASE("actions of the dual exist only over abelian groups") {
  const Coaction c = abelian_fixture("s3", "group");
  try {
    (void)action_from_coaction(c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
}

TEST_CASE("both crossed-product realizations agree on the frozen dimensions") {
  const Certificate semi = crossed_product_check(builtin_action("c2"));
  CHECK(semi.pass());
  const Certificate part = crossed_product_check(builtin_partial("c2"));
  CHECK(part.pass());
  // Dimensions ride along in the notes of the dimension entries; the
  // semidirect fixture over c2 generates all of M_2⊗M_2-compatible space of
  // dimension 4, the partial one a single line.
  const FellBundle semi_b = builtin_bundle("c2", "semidirect");
  CHECK(semi_b.total_dim() == 4);
  const FellBundle part_b = builtin_bundle("c2", "partial");
  CHECK(part_b.total_dim() == 1);
}
