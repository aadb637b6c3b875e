#include "fellkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/dual_action.hpp"
#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/harmonic.hpp"
#include "fellkit/rng.hpp"

namespace fellkit {
namespace {

double rel(double defect, double scale) { return defect / (1.0 + scale); }

double rel_diff(const CMatrix& a, const CMatrix& b) {
  return rel((a - b).frobenius_norm(),
             std::max(a.frobenius_norm(), b.frobenius_norm()));
}

int pick(Rng& rng, int n) {
  const int v = static_cast<int>(rng.uniform() * static_cast<double>(n));
  return std::min(n - 1, std::max(0, v));
}

// Fold a per-instance certificate into the running suite certificate,
// keeping the worst residual per anchor.
void fold_worst(Certificate& into, const Certificate& part) {
  for (const CheckEntry& e : part.checks) {
    auto it = std::find_if(
        into.checks.begin(), into.checks.end(),
        [&](const CheckEntry& x) { return x.anchor == e.anchor; });
    if (it == into.checks.end()) {
      into.checks.push_back(e);
    } else {
      it->residual = std::max(it->residual, e.residual);
      it->pass = it->pass && e.pass;
    }
  }
}

void not_applicable(Certificate& cert, const Fixture& f,
                    const std::string& why) {
  cert.add_info("Applicability", 0.0,
                "suite does not apply to " + f.name + ": " + why);
}

// ------------------------------------------------------------- plancherel

Certificate suite_plancherel(const Fixture& f, const SuiteOptions& opts) {
  const FiniteGroup& g = f.bundle->group;
  const int order = static_cast<int>(g.order());
  const double tol = 1e-12;  // these identities are exact at desk scale
  Certificate cert;

  const std::vector<CMatrix> lambdas = left_regular(g);
  double basis_worst = 0.0;
  for (int t = 0; t < order; ++t) {
    const Complex phi = plancherel(g, lambdas[static_cast<std::size_t>(t)]);
    const Complex expected(t == FiniteGroup::identity() ? 1.0 : 0.0, 0.0);
    basis_worst = std::max(basis_worst, std::abs(phi - expected));
  }
  cert.add("Plancherel.basis", basis_worst, tol,
           "φ(λ_t) = [t = e] on the translation basis");

  Rng rng(opts.seed);
  double trace_worst = 0.0;
  double tracial_worst = 0.0;
  double eq371_worst = 0.0;
  for (int s = 0; s < opts.samples; ++s) {
    const ScalarFn fa = random_scalar_fn(rng, g);
    const ScalarFn fb = random_scalar_fn(rng, g);
    const CMatrix x = lambda_scalar(g, fa);
    const CMatrix y = lambda_scalar(g, fb);

    const Complex phi = plancherel(g, x);
    const Complex tr = x.trace() * Complex(1.0 / order, 0.0);
    trace_worst = std::max(trace_worst, rel(std::abs(phi - tr), std::abs(tr)));

    const Complex xy = plancherel(g, x * y);
    const Complex yx = plancherel(g, y * x);
    tracial_worst =
        std::max(tracial_worst, rel(std::abs(xy - yx), std::abs(xy)));

    const ScalarFn conv = convolve_scalar(g, involute_scalar(g, fa), fb);
    for (int t = 0; t < order; ++t) {
      const Complex rhs =
          l2_inner_scalar(fa, right_translate(g, fb, t));
      eq371_worst = std::max(
          eq371_worst,
          rel(std::abs(conv[static_cast<std::size_t>(t)] - rhs),
              std::abs(rhs)));
    }
  }
  cert.add("Plancherel.trace", trace_worst, tol,
           "φ = trace/|G| on span{λ_t}");
  cert.add("Plancherel.tracial", tracial_worst, tol,
           "φ(xy) = φ(yx) on span{λ_t}");
  cert.add("Eq(371)", eq371_worst, tol,
           "(f* ∗ h)(t) = ⟨f | V_t h⟩ with (V_t h)(s) = h(st)");
  return cert;
}

// ---------------------------------------------------------- fourier-scalar

Certificate suite_fourier_scalar(const Fixture& f, const SuiteOptions& opts) {
  const FiniteGroup& g = f.bundle->group;
  Certificate cert;
  Rng rng(opts.seed);
  double inv_worst = 0.0;
  double conv_worst = 0.0;
  double star_worst = 0.0;
  for (int s = 0; s < opts.samples; ++s) {
    const ScalarFn fa = random_scalar_fn(rng, g);
    const ScalarFn fb = random_scalar_fn(rng, g);
    const CMatrix x = lambda_scalar(g, fa);
    const CMatrix y = lambda_scalar(g, fb);

    const ScalarFn back = fourier_scalar(g, x);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t t = 0; t < fa.size(); ++t) {
      num += std::norm(back[t] - fa[t]);
      den += std::norm(fa[t]);
    }
    inv_worst =
        std::max(inv_worst, rel(std::sqrt(num), std::sqrt(den)));

    conv_worst = std::max(
        conv_worst,
        rel_diff(lambda_scalar(g, convolve_scalar(g, fa, fb)), x * y));
    star_worst = std::max(
        star_worst,
        rel_diff(lambda_scalar(g, involute_scalar(g, fa)), x.adjoint()));
  }
  cert.add("Fourier.scalar.inversion", inv_worst, opts.tol,
           "fourier_scalar(λ(f)) = f");
  cert.add("Fourier.scalar.convolution", conv_worst, opts.tol,
           "λ(f ∗ h) = λ(f)·λ(h)");
  cert.add("Fourier.scalar.star", star_worst, opts.tol,
           "λ(f*) = λ(f)*");
  return cert;
}

// ------------------------------------------------------- positive-definite

OperatorFunction hermitian_symmetrize(const FiniteGroup& g,
                                      const OperatorFunction& f) {
  const int order = static_cast<int>(g.order());
  std::vector<CMatrix> vals;
  vals.reserve(static_cast<std::size_t>(order));
  for (int t = 0; t < order; ++t) {
    vals.push_back(Complex(0.5, 0.0) *
                   (f.value(t) + f.value(g.inv(t)).adjoint()));
  }
  return make_operator_function(g, std::move(vals));
}

OperatorFunction opfn_star_convolve(const FiniteGroup& g,
                                    const OperatorFunction& f) {
  // (f* ∗ f)(t) = Σ_u f(u)*·f(u·t); λ of the result is λ(f)*·λ(f) ⪰ 0.
  const int order = static_cast<int>(g.order());
  std::vector<CMatrix> vals;
  vals.reserve(static_cast<std::size_t>(order));
  for (int t = 0; t < order; ++t) {
    CMatrix acc(f.coeff_dim, f.coeff_dim);
    for (int u = 0; u < order; ++u) {
      acc += f.value(u).adjoint() * f.value(g.mul(u, t));
    }
    vals.push_back(std::move(acc));
  }
  return make_operator_function(g, std::move(vals));
}

Certificate suite_positive_definite(const Fixture& f,
                                    const SuiteOptions& opts) {
  const FiniteGroup& g = f.bundle->group;
  constexpr std::size_t kDim = 2;
  constexpr int kRandom = 160;
  constexpr int kPsd = 20;
  constexpr int kIndefinite = 20;
  Certificate cert;
  Rng rng(opts.seed);

  int disagreements = 0;
  auto verdicts_agree = [&](const OperatorFunction& fn) {
    const bool by_gram = is_positive_definite(fn, opts.tol);
    const bool by_lambda = is_psd(lambda_op(fn), opts.tol);
    if (by_gram != by_lambda) ++disagreements;
  };

  for (int i = 0; i < kRandom; ++i) {
    verdicts_agree(
        hermitian_symmetrize(g, random_operator_function(rng, g, kDim)));
  }
  for (int i = 0; i < kPsd; ++i) {
    verdicts_agree(opfn_star_convolve(g, random_operator_function(rng, g, kDim)));
  }
  for (int i = 0; i < kIndefinite; ++i) {
    OperatorFunction fn =
        opfn_star_convolve(g, random_operator_function(rng, g, kDim));
    const CMatrix lam = lambda_op(fn);
    double min_diag = lam.at(0, 0).real();
    for (std::size_t d = 1; d < lam.rows(); ++d) {
      min_diag = std::min(min_diag, lam.at(d, d).real());
    }
    const Complex shift(min_diag + 1.0, 0.0);
    CMatrix at_e = fn.value(FiniteGroup::identity());
    at_e -= shift * CMatrix::identity(kDim);
    fn.values[static_cast<std::size_t>(FiniteGroup::identity())] = at_e;
    verdicts_agree(fn);
  }
  const int total = kRandom + kPsd + kIndefinite;
  cert.add("PosDef.agreement",
           static_cast<double>(disagreements) / total, opts.tol,
           std::to_string(kRandom) + " random Hermitian-symmetric + " +
               std::to_string(kPsd) + " ψ*∗ψ + " +
               std::to_string(kIndefinite) +
               " shifted-indefinite operator functions; block-Gram and "
               "λ-operator PSD verdicts agree");

  for (int i = 0; i < kPsd; ++i) {
    const ScalarFn s = random_scalar_fn(rng, g);
    const ScalarFn psd = convolve_scalar(g, involute_scalar(g, s), s);
    fold_worst(cert, sqrt_transport_check(g, psd, 1e-8));
  }
  return cert;
}

// ----------------------------------------------------------- dual-coaction

Certificate suite_dual_coaction(const Fixture& f, const SuiteOptions& opts) {
  const Coaction& c = f.coaction;
  const FiniteGroup& g = f.bundle->group;
  const int order = static_cast<int>(g.order());
  const double tol = opts.tol;
  Certificate cert;
  cert.absorb(check_coaction(c, tol));

  const std::vector<CMatrix> lambdas = left_regular(g);
  const RegularModel model = regular_model(f.bundle);
  Rng rng(opts.seed);
  double w_av = 0.0;
  double w_et = 0.0;
  double w_norm = 0.0;
  for (int s = 0; s < opts.samples; ++s) {
    const Section xi = random_section(rng, f.bundle);
    const CMatrix rho = coaction_embedding(xi);
    w_av = std::max(
        w_av, rel_diff(average(c, rho),
                       kron(xi.value(FiniteGroup::identity()), lambdas[0])));
    for (int t = 0; t < order; ++t) {
      w_et = std::max(
          w_et,
          rel_diff(fourier_coeff(c, rho, t),
                   kron(xi.value(t), lambdas[static_cast<std::size_t>(t)])));
    }
    const double n1 = op_norm(rho);
    const double n2 = op_norm(regular_representation(model, xi));
    w_norm = std::max(w_norm,
                      rel(std::abs(n1 - n2), std::max(n1, n2)));
  }
  cert.add("Thm.DualCoactionIntegrable", w_av, tol,
           "Av(ρ(ξ)) = ρ-image of ξ(e), over " +
               std::to_string(opts.samples) + " random sections");
  cert.add("Thm.FourierTransfDualCoactions", w_et, tol,
           "E_t(ρ(ξ)) = ξ(t)⊗λ_t for every t");
  cert.add("NormAgreement", w_norm, 1e-8,
           "op_norm(ρ(ξ)) = op_norm(λ_B(ξ)), the two models computed "
           "independently");

  std::vector<Subspace> spectral;
  spectral.reserve(static_cast<std::size_t>(order));
  std::size_t total_dim = 0;
  std::size_t mismatch = 0;
  std::string dims = "(";
  for (int t = 0; t < order; ++t) {
    spectral.push_back(spectral_subspace(c, t));
    const std::size_t mt = spectral.back().dim();
    const std::size_t bt = f.bundle->fiber(t).dim();
    total_dim += mt;
    mismatch += mt > bt ? mt - bt : bt - mt;
    dims += (t == 0 ? "" : ",") + std::to_string(mt);
  }
  dims += ")";
  mismatch += total_dim > c.dim() ? total_dim - c.dim() : c.dim() - total_dim;
  cert.add("Spectral.dims", static_cast<double>(mismatch), tol,
           "dim M_t(A) = dim B_t per element and Σ_t dim M_t = dim A; "
           "dims " + dims);
  std::size_t overlap = 0;
  for (int s = 0; s < order; ++s) {
    for (int t = s + 1; t < order; ++t) {
      overlap += intersect(spectral[static_cast<std::size_t>(s)],
                           spectral[static_cast<std::size_t>(t)])
                     .dim();
    }
  }
  cert.add("Spectral.direct-sum", static_cast<double>(overlap), tol,
           "pairwise intersections of the spectral subspaces are zero");

  Rng rng2(opts.seed + 1);
  cert.absorb(pushforward_check(c, c, c.algebra.basis(),
                                random_element(rng2, c.algebra), tol),
              "id.");
  if (f.bundle->fiber(FiniteGroup::identity()).dim() > 0) {
    const auto sub = std::make_shared<const FellBundle>(
        unit_fiber_subbundle(*f.bundle));
    const BundleAlgebra subalg = build_algebra(sub, tol);
    const Coaction csub = dual_coaction(subalg);
    cert.absorb(pushforward_check(csub, c, csub.algebra.basis(),
                                  random_element(rng2, csub.algebra), tol),
                "sub.");
  }
  if (model.isometry.rows() == model.isometry.cols()) {
    // Full regular model: V is unitary and λ_B(ξ) = V*·ρ(ξ)·V, so the
    // λ_B-model carries the conjugated coaction with identical
    // coefficients.
    const CMatrix& v = model.isometry;
    std::vector<CMatrix> conj_basis;
    conj_basis.reserve(c.dim());
    for (const CMatrix& b : c.algebra.basis()) {
      conj_basis.push_back(v.adjoint() * b * v);
    }
    Coaction clam = c;
    clam.algebra =
        Subspace::from_orthonormal(c.algebra.ambient_dim(), conj_basis);
    clam.label = c.label + ":lambda-model";
    cert.absorb(
        pushforward_check(c, clam, conj_basis,
                          coaction_embedding(random_section(rng2, f.bundle)),
                          tol),
        "Cor039.");
  }
  return cert;
}

// ----------------------------------------------------------------- prop020

Certificate suite_prop020(const Fixture& f, const SuiteOptions& opts) {
  const Coaction& c = f.coaction;
  const FiniteGroup& g = f.bundle->group;
  const int order = static_cast<int>(g.order());
  constexpr int kTuples = 100;
  Certificate cert;
  Rng rng(opts.seed);
  for (int i = 0; i < kTuples; ++i) {
    const CMatrix a = random_element(rng, c.algebra);
    const CMatrix b = random_element(rng, c.algebra);
    const int s = pick(rng, order);
    const int t = pick(rng, order);
    const CMatrix m = fourier_coeff(c, random_element(rng, c.algebra), s);
    fold_worst(cert, prop020_check(c, a, b, m, s, t, opts.tol));
  }

  if (c.coeff_dim * static_cast<std::size_t>(order) <= 300) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const CMatrix x = random_element(rng, c.algebra);
      const CMatrix a = x.adjoint() * x;
      std::vector<CMatrix> vals;
      vals.reserve(static_cast<std::size_t>(order));
      for (int t = 0; t < order; ++t) {
        vals.push_back(fourier_coeff(c, a, t));
      }
      const OperatorFunction fn = make_operator_function(g, std::move(vals));
      if (!is_positive_definite(fn, opts.tol)) worst = 1.0;
    }
    cert.add("Prop020.posdef", worst, opts.tol,
             "t ↦ E_t(x*x) is a positive-definite operator function");
  }
  return cert;
}

// --------------------------------------------------------------- inversion

Certificate suite_inversion(const Fixture& f, const SuiteOptions& opts) {
  const Coaction& c = f.coaction;
  const std::size_t k = c.dim();
  const std::size_t per_element = std::max<std::size_t>(
      1, (static_cast<std::size_t>(opts.samples) + k - 1) / k);
  Certificate cert;
  for (std::size_t j = 0; j < k; ++j) {
    fold_worst(cert,
               coaction_inversion(c, c.algebra.basis()[j], opts.tol,
                                  per_element, opts.seed + j));
  }
  return cert;
}

// ---------------------------------------------------------------- fs-action

Certificate suite_fs_action(const Fixture& f, const SuiteOptions& opts) {
  const Coaction& c = f.coaction;
  const FiniteGroup& g = f.bundle->group;
  const int order = static_cast<int>(g.order());
  Certificate cert;
  Rng rng(opts.seed);
  const ScalarFn ones(static_cast<std::size_t>(order), Complex(1.0, 0.0));
  double w_unit = 0.0;
  double w_pointwise = 0.0;
  double w_assoc = 0.0;
  double w_lemma = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    const CMatrix a = random_element(rng, c.algebra);
    const ScalarFn u = random_scalar_fn(rng, g);
    const ScalarFn v = random_scalar_fn(rng, g);

    w_unit = std::max(w_unit, rel_diff(fs_action(ones, c, a), a));

    const Section xi = random_section(rng, f.bundle);
    std::vector<CMatrix> twisted;
    twisted.reserve(static_cast<std::size_t>(order));
    for (int t = 0; t < order; ++t) {
      twisted.push_back(u[static_cast<std::size_t>(t)] * xi.value(t));
    }
    w_pointwise = std::max(
        w_pointwise,
        rel_diff(fs_action(u, c, coaction_embedding(xi)),
                 coaction_embedding(make_section(f.bundle,
                                                 std::move(twisted)))));

    ScalarFn uv(static_cast<std::size_t>(order));
    for (std::size_t t = 0; t < uv.size(); ++t) uv[t] = u[t] * v[t];
    w_assoc = std::max(
        w_assoc,
        rel_diff(fs_action(uv, c, a), fs_action(u, c, fs_action(v, c, a))));

    const CMatrix ua = fs_action(u, c, a);
    for (int t = 0; t < order; ++t) {
      w_lemma = std::max(
          w_lemma,
          rel_diff(fourier_coeff(c, ua, t),
                   u[static_cast<std::size_t>(t)] * fourier_coeff(c, a, t)));
    }
  }
  cert.add("FsAction.unit", w_unit, opts.tol,
           "1∗a = a (ω_1 is the counit on span{λ_t})");
  cert.add("Eq(223)", w_pointwise, opts.tol,
           "u∗ρ(ξ) = ρ(u·ξ): the A(G)-action is pointwise multiplication "
           "on sections");
  cert.add("FsAction.assoc", w_assoc, opts.tol,
           "(u·v)∗a = u∗(v∗a)");
  cert.add("Lem.SpectralElemUnderAGAction", w_lemma, opts.tol,
           "E_t(u∗a) = E_t(a)·u(t)");
  return cert;
}

// ----------------------------------------------------------------- w-unitary

Certificate suite_w_unitary(const Fixture& f, const SuiteOptions& opts) {
  Certificate cert;
  cert.absorb(w_unitary_check(f.algebra, opts.tol));
  return cert;
}

// ------------------------------------------------------- abelian-dictionary

Certificate suite_abelian_dictionary(const Fixture& f,
                                     const SuiteOptions& opts) {
  Certificate cert;
  const FiniteGroup& g = f.bundle->group;
  if (!g.is_abelian()) {
    not_applicable(cert, f, "the base group " + g.name() + " is not abelian");
    return cert;
  }
  const Coaction& c = f.coaction;
  const double tol = opts.tol;

  const DualAction act = action_from_coaction(c);
  try {
    validate_dual_action(act, tol);
    cert.add("Dict.action-laws", 0.0, tol,
             "the derived dual action satisfies the action laws "
             "(identity, composition, *-automorphisms)");
  } catch (const Error& e) {
    cert.add("Dict.action-laws", 1.0, tol, e.what());
    return cert;
  }

  const Coaction back = coaction_from_action(act, tol);
  double w_coaction = 0.0;
  for (std::size_t j = 0; j < c.dim(); ++j) {
    w_coaction = std::max(
        w_coaction, rel((c.kappa[j] - back.kappa[j]).frobenius_norm(),
                        c.kappa[j].frobenius_norm()));
    w_coaction = std::max(
        w_coaction, rel((c.mult[j] - back.mult[j]).frobenius_norm(),
                        c.mult[j].frobenius_norm()));
  }
  w_coaction = std::max(
      w_coaction,
      rel((c.star - back.star).frobenius_norm(), c.star.frobenius_norm()));
  cert.add("Dict.roundtrip.coaction", w_coaction, tol,
           "coaction_from_action(action_from_coaction(δ)) = δ "
           "coefficientwise");

  const DualAction act2 = action_from_coaction(back);
  double w_action = 0.0;
  for (std::size_t x = 0; x < act.maps.size(); ++x) {
    w_action = std::max(
        w_action, rel((act.maps[x] - act2.maps[x]).frobenius_norm(),
                      act.maps[x].frobenius_norm()));
  }
  cert.add("Dict.roundtrip.action", w_action, tol,
           "action_from_coaction(coaction_from_action(α)) = α on the maps");

  const int order = static_cast<int>(g.order());
  double w_eq2 = 0.0;
  for (int t = 0; t < order; ++t) {
    const Subspace m1 = spectral_subspace(c, t);
    const Subspace m2 = spectral_subspace_action(act, t);
    w_eq2 = std::max(
        w_eq2, static_cast<double>(m1.dim() > m2.dim() ? m1.dim() - m2.dim()
                                                       : m2.dim() - m1.dim()));
    for (const CMatrix& b : m1.basis()) {
      w_eq2 = std::max(w_eq2, m2.containment_defect(b));
    }
    for (const CMatrix& b : m2.basis()) {
      w_eq2 = std::max(w_eq2, m1.containment_defect(b));
    }
  }
  cert.add("Eq(2)", w_eq2, tol,
           "the coaction spectral subspaces equal the joint eigenspaces of "
           "the dual action");

  Rng rng(opts.seed);
  double w_eq3 = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    const CMatrix b = random_element(rng, c.algebra);
    for (int t = 0; t < order; ++t) {
      w_eq3 = std::max(
          w_eq3, rel_diff(spectral_element(act, b, t), fourier_coeff(c, b, t)));
    }
  }
  cert.add("Eq(3)", w_eq3, tol,
           "E_t(b) = (1/|Ĝ|)·Σ_x ⟨x,t⟩·α_x(b) agrees with the Fourier "
           "coefficients");

  cert.absorb(dual_action_on_bundle(f.algebra, tol,
                                    static_cast<std::size_t>(opts.samples),
                                    opts.seed));
  return cert;
}

// ----------------------------------------------------------------- reconstruct

Certificate suite_reconstruct(const Fixture& f, const SuiteOptions& opts) {
  Certificate cert;
  const FiniteGroup& g = f.bundle->group;
  if (!g.is_abelian()) {
    not_applicable(cert, f, "the base group " + g.name() + " is not abelian");
    return cert;
  }
  const double tol = opts.tol;
  try {
    const DualAction act = action_from_coaction(f.coaction);
    auto [rebuilt, inner] = reconstruct_bundle(act, tol);
    cert.absorb(inner);
    std::size_t mismatch = 0;
    std::string dims = "(";
    for (std::size_t t = 0; t < rebuilt.fibers.size(); ++t) {
      const std::size_t got = rebuilt.fibers[t].dim();
      const std::size_t want = f.bundle->fibers[t].dim();
      mismatch += got > want ? got - want : want - got;
      dims += (t == 0 ? "" : ",") + std::to_string(got);
    }
    dims += ")";
    cert.add("Reconstruct.dims", static_cast<double>(mismatch), tol,
             "reconstructed fiber dimensions " + dims +
                 " match the original bundle");
  } catch (const Error& e) {
    cert.add("Reconstruct.dims", 1.0, tol,
             std::string("reconstruction failed: ") + e.what());
  }

  if (f.name == "group:c2") {
    try {
      auto [rebuilt, inner] = reconstruct_bundle(ad_sign_action(), tol);
      (void)rebuilt;
      cert.absorb(inner, "adsign.");
    } catch (const Error& e) {
      cert.add("adsign.Theta.bijective", 1.0, tol,
               std::string("reconstruction failed: ") + e.what());
    }
  }
  return cert;
}

// ------------------------------------------------------------ crossed-product

Certificate suite_crossed_product(const Fixture& f, const SuiteOptions& opts) {
  Certificate cert;
  const FiniteGroup& g = f.bundle->group;
  if (f.kind == "semidirect") {
    cert.absorb(crossed_product_check(builtin_action(f.group_name), opts.tol));
  } else if (f.kind == "partial") {
    cert.absorb(crossed_product_check(builtin_partial(f.group_name), opts.tol));
  } else {
    // Group bundle: C*_r(G) is the crossed product of the trivial action
    // on ℂ; the comparison runs against that realization.
    GlobalAction trivial;
    trivial.group = g;
    trivial.algebra =
        Subspace::from_orthonormal(1, {CMatrix::identity(1)});
    trivial.maps.assign(g.order(), CMatrix::identity(1));
    cert.absorb(crossed_product_check(trivial, opts.tol));
  }
  return cert;
}

using SuiteFn = Certificate (*)(const Fixture&, const SuiteOptions&);

struct SuiteSpec {
  const char* name;
  SuiteFn fn;
};

const SuiteSpec kSuites[] = {
    {"plancherel", suite_plancherel},
    {"fourier-scalar", suite_fourier_scalar},
    {"positive-definite", suite_positive_definite},
    {"dual-coaction", suite_dual_coaction},
    {"prop020", suite_prop020},
    {"inversion", suite_inversion},
    {"fs-action", suite_fs_action},
    {"w-unitary", suite_w_unitary},
    {"abelian-dictionary", suite_abelian_dictionary},
    {"reconstruct", suite_reconstruct},
    {"crossed-product", suite_crossed_product},
};

}  // namespace

Fixture make_fixture(const std::string& group, const std::string& kind,
                     double tol) {
  Fixture f;
  f.group_name = group;
  f.kind = kind;
  f.name = kind + ":" + group;
  f.bundle = std::make_shared<const FellBundle>(builtin_bundle(group, kind));
  f.algebra = build_algebra(f.bundle, tol);
  f.coaction = dual_coaction(f.algebra);
  return f;
}

std::vector<Fixture> corpus_fixtures(double tol) {
  std::vector<Fixture> out;
  out.reserve(default_corpus().size());
  for (const auto& [group, kind] : default_corpus()) {
    out.push_back(make_fixture(group, kind, tol));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteSpec& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

bool suite_known(const std::string& suite) {
  for (const SuiteSpec& s : kSuites) {
    if (suite == s.name) return true;
  }
  return false;
}

Certificate run_suite(const std::string& suite, const Fixture& f,
                      const SuiteOptions& opts) {
  const SuiteFn* fn = nullptr;
  for (const SuiteSpec& s : kSuites) {
    if (suite == s.name) {
      fn = &s.fn;
      break;
    }
  }
  if (fn == nullptr) {
    raise(ErrorCode::BadParameter, "unknown suite " + suite);
  }
  const auto start = std::chrono::steady_clock::now();
  Certificate cert = (*fn)(f, opts);
  const auto stop = std::chrono::steady_clock::now();
  cert.suite = suite;
  cert.fixture = f.name;
  cert.tolerance = opts.tol;
  cert.seed = opts.seed;
  cert.samples = opts.samples;
  char tolbuf[64];
  std::snprintf(tolbuf, sizeof(tolbuf), "%.17g", opts.tol);
  cert.input_digest =
      digest(suite + "|" + f.name + "|" + tolbuf + "|" +
             std::to_string(opts.seed) + "|" + std::to_string(opts.samples));
  cert.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return cert;
}

}  // namespace fellkit
