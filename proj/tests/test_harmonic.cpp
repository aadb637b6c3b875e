#include <cmath>
#include <vector>

#include "doctest.h"
#include "fellkit/error.hpp"
#include "fellkit/harmonic.hpp"
#include "fellkit/rng.hpp"

using namespace fellkit;

TEST_CASE("plancherel weight picks out the identity coefficient") {
  const FiniteGroup g = dihedral_group(4);
  const std::vector<CMatrix> lam = left_regular(g);
  for (int t = 0; t < g.order(); ++t) {
    const Complex expected = t == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    CHECK(std::abs(plancherel(g, lam[static_cast<std::size_t>(t)]) -
                   expected) == 0.0);
    // Agreement with the normalized trace on the translation span.
    CHECK(std::abs(plancherel(g, lam[static_cast<std::size_t>(t)]) -
                   lam[static_cast<std::size_t>(t)].trace() /
                       static_cast<double>(g.order())) < 1e-14);
  }
}

TEST_CASE("scalar Fourier transform inverts the translation sum") {
  const FiniteGroup g = quaternion8_group();
  Rng rng(41);
  const ScalarFn f = random_scalar_fn(rng, g);
  const ScalarFn back = fourier_scalar(g, lambda_scalar(g, f));
  for (int t = 0; t < g.order(); ++t) {
    CHECK(std::abs(back[static_cast<std::size_t>(t)] -
                   f[static_cast<std::size_t>(t)]) < 1e-12);
  }
}

TEST_CASE("operator Fourier coefficients invert lambda_op") {
  const FiniteGroup g = symmetric3_group();
  Rng rng(43);
  std::vector<CMatrix> values;
  for (int t = 0; t < g.order(); ++t) values.push_back(rng.matrix(3, 3));
  const OperatorFunction f = make_operator_function(g, values);
  const CMatrix a = lambda_op(f);
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix coeff = fourier_operator(g, a, t);
    CHECK((coeff - f.value(t)).max_abs() < 1e-12);
  }
  // slice_plancherel is the t = e coefficient.
  CHECK((slice_plancherel(g, a) - f.value(0)).max_abs() < 1e-12);
}

TEST_CASE("positive definiteness: frozen two-point verdicts") {
  const FiniteGroup g = cyclic_group(2);
  auto scalar_fn = [&](double at_e, double at_g) {
    std::vector<CMatrix> vals;
    CMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = at_e;
    b.at(0, 0) = at_g;
    vals.push_back(a);
    vals.push_back(b);
    return make_operator_function(g, vals);
  };
  // Block Gram [[2,1],[1,2]] is PSD; [[1,2],[2,1]] has eigenvalue −1.
  CHECK(is_positive_definite(scalar_fn(2.0, 1.0)));
  CHECK_FALSE(is_positive_definite(scalar_fn(1.0, 2.0)));
}

TEST_CASE("block Gram matrix and lambda_op carry the same spectrum") {
  const FiniteGroup g = cyclic_group(4);
  Rng rng(47);
  // Hermitian-symmetrized so both matrices are Hermitian: f(t⁻¹) = f(t)*.
  std::vector<CMatrix> vals(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) {
    if (vals[static_cast<std::size_t>(t)].rows()) continue;
    const CMatrix m = rng.matrix(2, 2);
    if (g.inv(t) == t) {
      vals[static_cast<std::size_t>(t)] = 0.5 * (m + m.adjoint());
    } else {
      vals[static_cast<std::size_t>(t)] = m;
      vals[static_cast<std::size_t>(g.inv(t))] = m.adjoint();
    }
  }
  const OperatorFunction f = make_operator_function(g, vals);
  const std::vector<double> ev_gram = herm_eig(block_gram(f), false).eigenvalues;
  const std::vector<double> ev_op = herm_eig(lambda_op(f), false).eigenvalues;
  REQUIRE(ev_gram.size() == ev_op.size());
  for (std::size_t i = 0; i < ev_gram.size(); ++i) {
    CHECK(ev_gram[i] == doctest::Approx(ev_op[i]).epsilon(1e-9));
  }
}

TEST_CASE("inversion certificate gates on the translation span") {
  const FiniteGroup g = cyclic_group(3);
  Rng rng(53);
  // In-span input: every entry gated and passing.
  std::vector<CMatrix> values;
  for (int t = 0; t < g.order(); ++t) values.push_back(rng.matrix(2, 2));
  const CMatrix a = lambda_op(make_operator_function(g, values));
  const Certificate good = inversion_check(g, a);
  CHECK(good.pass());
  CHECK(good.worst_residual() < 1e-12);

  // Off-span input: reported, not gated, and the verdict stays green.
  CMatrix off = a;
  off.at(0, 1) += Complex(0.5, 0.0);
  off.at(1, 0) += Complex(-0.25, 0.125);
  const Certificate info = inversion_check(g, off);
  CHECK(info.pass());
  bool saw_ungated = false;
  for (const CheckEntry& e : info.checks) saw_ungated |= !e.gated;
  CHECK(saw_ungated);
}

TEST_CASE("square-root transport splits a positive function") {
  const FiniteGroup g = product_group(cyclic_group(2), cyclic_group(2));
  Rng rng(59);
  // f = s*∗s is positive-definite by construction.
  const ScalarFn s = random_scalar_fn(rng, g);
  const ScalarFn f = convolve_scalar(g, involute_scalar(g, s), s);
  const Certificate cert = sqrt_transport_check(g, f);
  CHECK(cert.pass());
  CHECK(cert.worst_residual() < 1e-9);
}

TEST_CASE("operator functions validate their shape") {
  const FiniteGroup g = cyclic_group(2);
  std::vector<CMatrix> ragged;
  ragged.push_back(CMatrix(2, 2));
  ragged.push_back(CMatrix(3, 3));
  CHECK_THROWS_AS((void)make_operator_function(g, ragged), Error);
  std::vector<CMatrix> short_list;
  short_list.push_back(CMatrix(2, 2));
  CHECK_THROWS_AS((void)make_operator_function(g, short_list), Error);
}
