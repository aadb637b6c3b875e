#include "fellkit/dual_action.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/error.hpp"
#include "fellkit/rng.hpp"

namespace fellkit {
namespace {

constexpr double kMembershipTol = 1e-9;

double rel(double defect, double scale) { return defect / (1.0 + scale); }

double vec_norm(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

double vec_dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

std::vector<Complex> algebra_coords(const DualAction& a, const CMatrix& m,
                                    const std::string& op) {
  if (m.rows() != a.algebra.ambient_dim() ||
      m.cols() != a.algebra.ambient_dim()) {
    raise(ErrorCode::DimensionMismatch,
          op + ": element is " + std::to_string(m.rows()) + "x" +
              std::to_string(m.cols()) + ", algebra ambient is " +
              std::to_string(a.algebra.ambient_dim()));
  }
  const double defect = a.algebra.containment_defect(m);
  if (defect > kMembershipTol * (1.0 + m.frobenius_norm())) {
    raise(ErrorCode::NotInAlgebra,
          op + ": element has off-algebra defect " + std::to_string(defect));
  }
  return a.algebra.coordinates(m);
}

std::vector<Complex> apply_map(const CMatrix& map,
                               const std::vector<Complex>& v) {
  const std::size_t k = map.rows();
  std::vector<Complex> out(k, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i] += map.at(i, j) * v[j];
  }
  return out;
}

CMatrix materialize(const Subspace& s, const std::vector<Complex>& coords) {
  CMatrix out(s.ambient_dim(), s.ambient_dim());
  const auto& basis = s.basis();
  for (std::size_t p = 0; p < coords.size(); ++p) {
    if (std::norm(coords[p]) == 0.0) continue;
    out += coords[p] * basis[p];
  }
  return out;
}

void require_character(const DualAction& a, int x, const std::string& op) {
  if (x < 0 || static_cast<std::size_t>(x) >= a.dual.order()) {
    raise(ErrorCode::BadParameter,
          op + ": character index " + std::to_string(x) +
              " out of range for dual order " + std::to_string(a.dual.order()));
  }
}

// Θ(ξ) = Σ_t ξ(t).
CMatrix theta(const Section& xi) {
  CMatrix out(xi.bundle->ambient_dim, xi.bundle->ambient_dim);
  for (const CMatrix& v : xi.values) out += v;
  return out;
}

// Shared core for the two crossed-product overloads: compare the bundle
// algebra upstairs (generators b⊗λ_t in M_{n·|G|}) with the algebra
// generated downstairs by the covariant pair (the raw fiber values in M_n),
// through the generator-matching map Φ(b⊗λ_t) = b.
Certificate crossed_core(const FellBundle& bundle, const GlobalAction& action,
                         double tol) {
  Certificate cert;
  cert.suite = "crossed-product";
  cert.fixture = bundle.label;
  cert.tolerance = tol;

  const FiniteGroup& g = bundle.group;
  const BundlePtr bp = std::make_shared<const FellBundle>(bundle);
  const BundleAlgebra alg = build_algebra(bp, tol);
  const std::size_t k = alg.generators.size();

  std::vector<CMatrix> down_gens;
  down_gens.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [t, pos] = alg.generator_index[i];
    down_gens.push_back(bundle.fiber(t).basis()[pos]);
  }
  const Subspace down = Subspace::span(bundle.ambient_dim, down_gens);
  const double dim_defect =
      k == 0 ? 0.0
             : static_cast<double>(k - down.dim()) / static_cast<double>(k);
  cert.add("CrossedProduct.dim", dim_defect, tol,
           "bundle algebra has dimension " + std::to_string(k) +
               ", covariant algebra spans " + std::to_string(down.dim()));

  // Products and adjoints evaluated independently in both ambient spaces,
  // compared through Φ(b⊗λ_t) = b. The generators b⊗λ_t are pairwise
  // orthogonal of norm √|G|, so orthonormal-basis coordinates are the
  // generator-frame coefficients scaled by √|G|.
  const double root_order = std::sqrt(static_cast<double>(g.order()));
  double worst_mult = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const CMatrix up = alg.generators[i] * alg.generators[j];
      const std::vector<Complex> coords = alg.algebra.coordinates(up);
      const double stray = alg.algebra.containment_defect(up);
      CMatrix mapped(bundle.ambient_dim, bundle.ambient_dim);
      for (std::size_t q = 0; q < k; ++q) {
        if (std::norm(coords[q]) == 0.0) continue;
        mapped += (coords[q] / root_order) * down_gens[q];
      }
      const CMatrix direct = down_gens[i] * down_gens[j];
      const double num = std::hypot((mapped - direct).frobenius_norm(), stray);
      worst_mult = std::max(worst_mult, rel(num, direct.frobenius_norm()));
    }
  }
  cert.add("CrossedProduct.mult", worst_mult, tol,
           "Φ(xy) = Φ(x)Φ(y) over all generator pairs, products computed "
           "independently in both realizations");

  double worst_star = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const CMatrix up = alg.generators[i].adjoint();
    const std::vector<Complex> coords = alg.algebra.coordinates(up);
    const double stray = alg.algebra.containment_defect(up);
    CMatrix mapped(bundle.ambient_dim, bundle.ambient_dim);
    for (std::size_t q = 0; q < k; ++q) {
      if (std::norm(coords[q]) == 0.0) continue;
      mapped += (coords[q] / root_order) * down_gens[q];
    }
    const CMatrix direct = down_gens[i].adjoint();
    const double num = std::hypot((mapped - direct).frobenius_norm(), stray);
    worst_star = std::max(worst_star, rel(num, direct.frobenius_norm()));
  }
  cert.add("CrossedProduct.star", worst_star, tol,
           "Φ(x*) = Φ(x)* over all generators");

  double worst_cov = 0.0;
  const int order = static_cast<int>(g.order());
  for (int t = 0; t < order; ++t) {
    const CMatrix u = covariant_unitary(action, t);
    for (const CMatrix& a : action.algebra.basis()) {
      const CMatrix lhs = u * covariant_embedding(action, a) * u.adjoint();
      const CMatrix rhs = covariant_embedding(action, action.apply(t, a));
      worst_cov = std::max(
          worst_cov, rel((lhs - rhs).frobenius_norm(), rhs.frobenius_norm()));
    }
  }
  cert.add("CrossedProduct.covariance", worst_cov, tol,
           "regular covariant pair: u_t·π(a)·u_t* = π(β_t(a))");
  return cert;
}

}  // namespace

CMatrix dual_action_apply(const DualAction& a, int x, const CMatrix& m) {
  require_character(a, x, "dual_action_apply");
  const std::vector<Complex> coords =
      algebra_coords(a, m, "dual_action_apply");
  return materialize(a.algebra,
                     apply_map(a.maps[static_cast<std::size_t>(x)], coords));
}

void validate_dual_action(const DualAction& a, double tol) {
  const std::size_t n = a.dual.order();
  const std::size_t k = a.dim();
  if (a.maps.size() != n) {
    raise(ErrorCode::NotAnAction,
          "dual action has " + std::to_string(a.maps.size()) +
              " maps, dual group order is " + std::to_string(n));
  }
  for (const CMatrix& m : a.maps) {
    if (m.rows() != k || m.cols() != k) {
      raise(ErrorCode::NotAnAction,
            "map is " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + ", algebra dimension is " +
                std::to_string(k));
    }
  }

  const CMatrix id = CMatrix::identity(k);
  const int e = a.dual.dual.identity();
  if (rel((a.maps[static_cast<std::size_t>(e)] - id).frobenius_norm(),
          std::sqrt(static_cast<double>(k))) > tol) {
    raise(ErrorCode::NotAnAction,
          "the map at the trivial character is not the identity");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int xy = a.dual.dual.mul(static_cast<int>(x), static_cast<int>(y));
      const CMatrix comp = a.maps[x] * a.maps[y];
      const CMatrix& expected = a.maps[static_cast<std::size_t>(xy)];
      const double defect = rel((comp - expected).frobenius_norm(),
                                expected.frobenius_norm());
      if (defect > tol) {
        raise(ErrorCode::NotAnAction,
              "composition law fails at characters (" + std::to_string(x) +
                  "," + std::to_string(y) + "), relative defect " +
                  std::to_string(defect));
      }
    }
  }

  std::vector<CMatrix> mult;
  CMatrix star;
  closure_tables(a.algebra, tol, &mult, &star);
  for (std::size_t x = 0; x < n; ++x) {
    const CMatrix& map = a.maps[x];
    if (numeric_rank(map) != k) {
      raise(ErrorCode::NotAnAction,
            "the map at character " + std::to_string(x) +
                " is not invertible");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Complex> lhs(k, Complex(0.0, 0.0));
        for (std::size_t m = 0; m < k; ++m) {
          const Complex cm = mult[i].at(j, m);
          if (std::norm(cm) == 0.0) continue;
          for (std::size_t l = 0; l < k; ++l) lhs[l] += cm * map.at(l, m);
        }
        std::vector<Complex> rhs(k, Complex(0.0, 0.0));
        for (std::size_t p = 0; p < k; ++p) {
          const Complex up = map.at(p, i);
          if (std::norm(up) == 0.0) continue;
          for (std::size_t q = 0; q < k; ++q) {
            const Complex w = up * map.at(q, j);
            if (std::norm(w) == 0.0) continue;
            for (std::size_t l = 0; l < k; ++l) rhs[l] += w * mult[p].at(q, l);
          }
        }
        const double defect = rel(vec_dist(lhs, rhs),
                                  std::max(vec_norm(lhs), vec_norm(rhs)));
        if (defect > tol) {
          raise(ErrorCode::NotAnAction,
                "the map at character " + std::to_string(x) +
                    " is not multiplicative at basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    "), relative defect " + std::to_string(defect));
        }
      }
      std::vector<Complex> lhs(k, Complex(0.0, 0.0));
      for (std::size_t m = 0; m < k; ++m) {
        const Complex cm = star.at(i, m);
        if (std::norm(cm) == 0.0) continue;
        for (std::size_t l = 0; l < k; ++l) lhs[l] += cm * map.at(l, m);
      }
      std::vector<Complex> rhs(k, Complex(0.0, 0.0));
      for (std::size_t p = 0; p < k; ++p) {
        const Complex z = std::conj(map.at(p, i));
        if (std::norm(z) == 0.0) continue;
        for (std::size_t l = 0; l < k; ++l) rhs[l] += z * star.at(p, l);
      }
      const double defect = rel(vec_dist(lhs, rhs),
                                std::max(vec_norm(lhs), vec_norm(rhs)));
      if (defect > tol) {
        raise(ErrorCode::NotAnAction,
              "the map at character " + std::to_string(x) +
                  " does not commute with the involution at basis element " +
                  std::to_string(i) + ", relative defect " +
                  std::to_string(defect));
      }
    }
  }
}

DualAction inner_dual_action(const DualGroup& dual, const Subspace& algebra,
                             const std::vector<CMatrix>& unitaries,
                             std::string label) {
  const std::size_t n = dual.order();
  const std::size_t d = algebra.ambient_dim();
  const std::size_t k = algebra.dim();
  if (unitaries.size() != n) {
    raise(ErrorCode::DimensionMismatch,
          "inner_dual_action: " + std::to_string(unitaries.size()) +
              " unitaries for dual order " + std::to_string(n));
  }
  const CMatrix id = CMatrix::identity(d);
  for (std::size_t x = 0; x < n; ++x) {
    const CMatrix& u = unitaries[x];
    if (u.rows() != d || u.cols() != d) {
      raise(ErrorCode::DimensionMismatch,
            "inner_dual_action: unitary is " + std::to_string(u.rows()) +
                "x" + std::to_string(u.cols()) + ", ambient is " +
                std::to_string(d));
    }
    const double defect = (u.adjoint() * u - id).frobenius_norm();
    if (defect > 1e-9 * (1.0 + std::sqrt(static_cast<double>(d)))) {
      raise(ErrorCode::BadParameter,
            "inner_dual_action: matrix at character " + std::to_string(x) +
                " is not unitary (defect " + std::to_string(defect) + ")");
    }
  }

  DualAction a;
  a.dual = dual;
  a.algebra = algebra;
  a.label = std::move(label);
  a.maps.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix map(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const CMatrix img =
          unitaries[x] * algebra.basis()[i] * unitaries[x].adjoint();
      const double stray = algebra.containment_defect(img);
      if (stray > 1e-9 * (1.0 + img.frobenius_norm())) {
        raise(ErrorCode::NotAnAction,
              "inner_dual_action: conjugation at character " +
                  std::to_string(x) + " does not preserve the algebra "
                  "(defect " + std::to_string(stray) + ")");
      }
      const std::vector<Complex> coords = algebra.coordinates(img);
      for (std::size_t l = 0; l < k; ++l) map.at(l, i) = coords[l];
    }
    a.maps.push_back(std::move(map));
  }
  return a;
}

DualAction action_from_coaction(const Coaction& c) {
  if (!c.group.is_abelian()) {
    raise(ErrorCode::NotAbelian,
          "action_from_coaction: group " + c.group.name() +
              " is not abelian");
  }
  const DualGroup dual = dual_group(c.group);
  const std::size_t n = dual.order();
  const std::size_t k = c.dim();

  DualAction a;
  a.dual = dual;
  a.algebra = c.algebra;
  a.label = "action:" + c.label;
  a.maps.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix map(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t p = 0; p < k; ++p) {
        Complex acc(0.0, 0.0);
        for (int t = 0; t < c.group.order(); ++t) {
          acc += c.kappa[j].at(p, static_cast<std::size_t>(t)) *
                 std::conj(dual.pairing(static_cast<int>(x), t));
        }
        map.at(p, j) = acc;
      }
    }
    a.maps.push_back(std::move(map));
  }
  return a;
}

Coaction coaction_from_action(const DualAction& a, double tol) {
  const FiniteGroup& g = a.dual.base;
  const int order = g.order();
  const std::size_t n = a.dual.order();
  const std::size_t k = a.dim();

  Coaction c;
  c.group = g;
  c.algebra = a.algebra;
  c.coeff_dim = a.algebra.ambient_dim();
  c.label = "coaction:" + a.label;
  closure_tables(a.algebra, tol, &c.mult, &c.star);
  c.kappa.assign(k, CMatrix(k, static_cast<std::size_t>(order)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t p = 0; p < k; ++p) {
      for (int t = 0; t < order; ++t) {
        Complex acc(0.0, 0.0);
        for (std::size_t x = 0; x < n; ++x) {
          acc += a.dual.pairing(static_cast<int>(x), t) *
                 a.maps[x].at(p, j);
        }
        c.kappa[j].at(p, static_cast<std::size_t>(t)) =
            acc * Complex(1.0 / static_cast<double>(n), 0.0);
      }
    }
  }
  c.offspan_gram = CMatrix(k, k);
  return c;
}

CMatrix spectral_element(const DualAction& a, const CMatrix& b, int t) {
  if (t < 0 || t >= static_cast<int>(a.dual.base.order())) {
    raise(ErrorCode::BadParameter,
          "spectral_element: group element " + std::to_string(t) +
              " out of range for order " +
              std::to_string(a.dual.base.order()));
  }
  const std::vector<Complex> coords =
      algebra_coords(a, b, "spectral_element");
  const std::size_t n = a.dual.order();
  const std::size_t k = a.dim();
  std::vector<Complex> out(k, Complex(0.0, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    const std::vector<Complex> moved = apply_map(a.maps[x], coords);
    const Complex w = a.dual.pairing(static_cast<int>(x), t) *
                      Complex(1.0 / static_cast<double>(n), 0.0);
    for (std::size_t p = 0; p < k; ++p) out[p] += w * moved[p];
  }
  return materialize(a.algebra, out);
}

Subspace spectral_subspace_action(const DualAction& a, int t) {
  if (t < 0 || t >= static_cast<int>(a.dual.base.order())) {
    raise(ErrorCode::BadParameter,
          "spectral_subspace_action: group element " + std::to_string(t) +
              " out of range for order " +
              std::to_string(a.dual.base.order()));
  }
  const std::size_t n = a.dual.order();
  const std::size_t k = a.dim();
  CMatrix stacked(n * k, k);
  for (std::size_t x = 0; x < n; ++x) {
    const Complex ev = std::conj(a.dual.pairing(static_cast<int>(x), t));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex v = a.maps[x].at(i, j);
        if (i == j) v -= ev;
        stacked.at(x * k + i, j) = v;
      }
    }
  }
  const std::vector<std::vector<Complex>> kernel = kernel_vectors(stacked);
  std::vector<CMatrix> members;
  members.reserve(kernel.size());
  for (const std::vector<Complex>& coords : kernel) {
    members.push_back(materialize(a.algebra, coords));
  }
  return Subspace::span(a.algebra.ambient_dim(), members);
}

Certificate dual_action_on_bundle(const BundleAlgebra& alg, double tol,
                                  std::size_t samples, std::uint64_t seed) {
  const FiniteGroup& g = alg.bundle->group;
  if (!g.is_abelian()) {
    raise(ErrorCode::NotAbelian,
          "dual_action_on_bundle: group " + g.name() + " is not abelian");
  }
  const Coaction c = dual_coaction(alg);
  const DualAction beta = action_from_coaction(c);
  const std::size_t n = beta.dual.order();

  Certificate cert;
  cert.suite = "dual-action";
  cert.fixture = alg.bundle->label;
  cert.tolerance = tol;
  cert.seed = seed;
  cert.samples = static_cast<int>(samples);

  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const Section xi = random_section(rng, alg.bundle);
    const CMatrix rho = coaction_embedding(xi);
    for (std::size_t x = 0; x < n; ++x) {
      const CMatrix lhs = dual_action_apply(beta, static_cast<int>(x), rho);
      std::vector<CMatrix> twisted;
      twisted.reserve(xi.values.size());
      for (int t = 0; t < static_cast<int>(g.order()); ++t) {
        twisted.push_back(
            std::conj(beta.dual.pairing(static_cast<int>(x), t)) *
            xi.value(t));
      }
      const CMatrix rhs = coaction_embedding(
          make_section(alg.bundle, std::move(twisted)));
      worst = std::max(worst, rel((lhs - rhs).frobenius_norm(),
                                  std::max(lhs.frobenius_norm(),
                                           rhs.frobenius_norm())));
    }
  }
  cert.add("Eq(1)", worst, tol,
           "β_x(ρ(ξ)) = ρ(x·ξ) with (x·ξ)(t) = conj(⟨x,t⟩)·ξ(t), over all " +
               std::to_string(n) + " characters × " +
               std::to_string(samples) + " random sections");
  return cert;
}

std::pair<FellBundle, Certificate> reconstruct_bundle(const DualAction& a,
                                                      double tol) {
  const FiniteGroup& g = a.dual.base;
  const int order = g.order();
  const std::size_t k = a.dim();

  FellBundle b;
  b.group = g;
  b.ambient_dim = a.algebra.ambient_dim();
  b.label = "reconstructed:" + a.label;
  b.fibers.reserve(static_cast<std::size_t>(order));
  std::size_t total = 0;
  for (int t = 0; t < order; ++t) {
    b.fibers.push_back(spectral_subspace_action(a, t));
    total += b.fibers.back().dim();
  }
  if (total != k) {
    raise(ErrorCode::SpectralGapFailure,
          "reconstruct_bundle: spectral subspaces span " +
              std::to_string(total) + " of " + std::to_string(k) +
              " algebra dimensions; the input is not a genuine action");
  }

  Certificate cert;
  cert.suite = "reconstruct";
  cert.fixture = a.label;
  cert.tolerance = tol;
  cert.absorb(check_bundle_axioms(b, tol));

  // Θ(ξ) = Σ_t ξ(t): bijectivity as a rank statement about the combined
  // fiber bases inside A.
  const std::size_t d = b.ambient_dim;
  CMatrix stacked(d * d, total);
  std::size_t col = 0;
  for (int t = 0; t < order; ++t) {
    for (const CMatrix& v : b.fiber(t).basis()) {
      for (std::size_t idx = 0; idx < d * d; ++idx) {
        stacked.at(idx, col) = v[idx];
      }
      ++col;
    }
  }
  const std::size_t rank = numeric_rank(stacked);
  const double bij = k == 0 ? 0.0
                            : static_cast<double>(k - rank) /
                                  static_cast<double>(k);
  cert.add("Theta.bijective", bij, tol,
           "Θ image spans rank " + std::to_string(rank) + " of " +
               std::to_string(k) + "; fiber dimensions add up to dim A");

  const BundlePtr bp = std::make_shared<const FellBundle>(b);
  double worst_mult = 0.0;
  double worst_star = 0.0;
  std::string mult_note =
      "Θ(ξ∗η) = Θ(ξ)·Θ(η) over all fiber-basis delta sections";
  std::string star_note = "Θ(ξ*) = Θ(ξ)* over all fiber-basis delta sections";
  try {
    std::vector<Section> deltas;
    for (int t = 0; t < order; ++t) {
      for (const CMatrix& v : bp->fiber(t).basis()) {
        deltas.push_back(delta_section(bp, t, v));
      }
    }
    for (const Section& xi : deltas) {
      const CMatrix tx = theta(xi);
      for (const Section& eta : deltas) {
        const CMatrix lhs = theta(convolve(xi, eta, tol));
        const CMatrix rhs = tx * theta(eta);
        worst_mult = std::max(worst_mult,
                              rel((lhs - rhs).frobenius_norm(),
                                  std::max(lhs.frobenius_norm(),
                                           rhs.frobenius_norm())));
      }
      const CMatrix lhs = theta(involute(xi, tol));
      const CMatrix rhs = tx.adjoint();
      worst_star = std::max(worst_star,
                            rel((lhs - rhs).frobenius_norm(),
                                std::max(lhs.frobenius_norm(),
                                         rhs.frobenius_norm())));
    }
  } catch (const Error& e) {
    worst_mult = 1.0;
    worst_star = 1.0;
    mult_note = std::string("section algebra is not closed: ") + e.what();
    star_note = mult_note;
  }
  cert.add("Theta.multiplicative", worst_mult, tol, mult_note);
  cert.add("Theta.star", worst_star, tol, star_note);

  // Eq(1) intertwining: on B_t, α_x must act as the character twist.
  double worst_eq1 = 0.0;
  for (std::size_t x = 0; x < a.dual.order(); ++x) {
    for (int t = 0; t < order; ++t) {
      const Complex ev = std::conj(a.dual.pairing(static_cast<int>(x), t));
      for (const CMatrix& v : b.fiber(t).basis()) {
        const CMatrix lhs = dual_action_apply(a, static_cast<int>(x), v);
        const CMatrix rhs = ev * v;
        worst_eq1 = std::max(worst_eq1,
                             rel((lhs - rhs).frobenius_norm(),
                                 rhs.frobenius_norm()));
      }
    }
  }
  cert.add("Eq(1)", worst_eq1, tol,
           "α_x(b) = conj(⟨x,t⟩)·b on every reconstructed fiber");
  return {std::move(b), std::move(cert)};
}

Certificate crossed_product_check(const GlobalAction& action, double tol) {
  return crossed_core(semidirect_bundle(action), action, tol);
}

Certificate crossed_product_check(const PartialActionData& pd, double tol) {
  return crossed_core(partial_action_bundle(pd), pd.action, tol);
}

}  // namespace fellkit
