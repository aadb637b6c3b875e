#include "fellkit/fell_bundle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

// Flat index of every fiber basis element: (group element, basis position).
struct Generator {
  int t;
  std::size_t k;
};

std::vector<Generator> all_generators(const FellBundle& b) {
  std::vector<Generator> gens;
  for (int t = 0; t < b.group.order(); ++t) {
    for (std::size_t k = 0; k < b.fiber(t).dim(); ++k) {
      gens.push_back({t, k});
    }
  }
  return gens;
}

const CMatrix& gen_value(const FellBundle& b, const Generator& g) {
  return b.fiber(g.t).basis()[g.k];
}

double rel(double defect, double scale) { return defect / (1.0 + scale); }

// max(0, -λmin)/(1+|λ|max) for the Hermitian part of m.
double negativity_defect(const CMatrix& m) {
  HermEig eig = herm_eig(m, /*want_vectors=*/false, /*hermitian_tol=*/1e-6);
  if (eig.eigenvalues.empty()) return 0.0;
  double lo = eig.eigenvalues.front();
  double hi = eig.eigenvalues.back();
  double scale = std::max(std::abs(lo), std::abs(hi));
  return rel(std::max(0.0, -lo), scale);
}

void require_well_formed(const FellBundle& b) {
  if (b.fibers.size() != static_cast<std::size_t>(b.group.order())) {
    raise(ErrorCode::DimensionMismatch,
          "bundle has " + std::to_string(b.fibers.size()) +
              " fibers but the group has order " +
              std::to_string(b.group.order()));
  }
  for (int t = 0; t < b.group.order(); ++t) {
    if (b.fiber(t).ambient_dim() != b.ambient_dim) {
      raise(ErrorCode::DimensionMismatch,
            "fiber " + std::to_string(t) + " lives in M_" +
                std::to_string(b.fiber(t).ambient_dim()) +
                " but the bundle ambient is M_" +
                std::to_string(b.ambient_dim));
    }
  }
}

}  // namespace

std::size_t FellBundle::total_dim() const {
  std::size_t d = 0;
  for (const Subspace& f : fibers) d += f.dim();
  return d;
}

Certificate check_bundle_axioms(const FellBundle& b, double tol) {
  require_well_formed(b);
  Certificate cert;
  cert.suite = "bundle-axioms";
  cert.fixture = b.label.empty() ? "unnamed" : b.label;
  cert.tolerance = tol;

  const std::vector<Generator> gens = all_generators(b);
  const std::size_t ngen = gens.size();

  // (i) closure: basis products land in the target fiber.
  double closure = 0.0;
  std::string closure_note;
  for (const Generator& x : gens) {
    const CMatrix& bx = gen_value(b, x);
    for (const Generator& y : gens) {
      CMatrix prod = bx * gen_value(b, y);
      int ts = b.group.mul(x.t, y.t);
      double d = rel(b.fiber(ts).containment_defect(prod),
                     prod.frobenius_norm());
      if (d > closure) {
        closure = d;
        closure_note = "worst pair: fiber " + std::to_string(x.t) +
                       " times fiber " + std::to_string(y.t);
      }
    }
  }
  cert.add("Axiom.i.closure", closure, tol, closure_note);

  // (i) involution: adjoints of each fiber basis land in the inverse fiber,
  // in both directions.
  double involution = 0.0;
  std::string involution_note;
  for (int t = 0; t < b.group.order(); ++t) {
    int ti = b.group.inv(t);
    for (const CMatrix& v : b.fiber(t).basis()) {
      CMatrix adj = v.adjoint();
      double d = rel(b.fiber(ti).containment_defect(adj),
                     adj.frobenius_norm());
      if (d > involution) {
        involution = d;
        involution_note = "adjoint of fiber " + std::to_string(t) +
                          " escapes fiber " + std::to_string(ti);
      }
    }
  }
  cert.add("Axiom.i.involution", involution, tol, involution_note);

  // (ii) associativity plus the involutive algebra laws, on a deterministic
  // sample of basis triples/pairs.
  double assoc = 0.0;
  if (ngen > 0) {
    const std::size_t cap = 200;
    std::size_t total = ngen * ngen * ngen;
    std::size_t stride = std::max<std::size_t>(1, total / cap);
    for (std::size_t flat = 0; flat < total; flat += stride) {
      const CMatrix& x = gen_value(b, gens[flat % ngen]);
      const CMatrix& y = gen_value(b, gens[(flat / ngen) % ngen]);
      const CMatrix& z = gen_value(b, gens[(flat / (ngen * ngen)) % ngen]);
      CMatrix lhs = (x * y) * z;
      CMatrix rhs = x * (y * z);
      assoc = std::max(assoc,
                       rel((lhs - rhs).frobenius_norm(),
                           std::max(lhs.frobenius_norm(),
                                    rhs.frobenius_norm())));
      CMatrix anti = (x * y).adjoint() - y.adjoint() * x.adjoint();
      assoc = std::max(
          assoc, rel(anti.frobenius_norm(),
                     x.frobenius_norm() * y.frobenius_norm()));
      CMatrix invol = x.adjoint().adjoint() - x;
      assoc = std::max(assoc, rel(invol.frobenius_norm(),
                                  x.frobenius_norm()));
    }
  }
  cert.add("Axiom.ii.associativity", assoc, tol);

  // (iii) submultiplicativity and adjoint isometry of the operator norm,
  // on a deterministic sample of basis pairs.
  double norm_defect = 0.0;
  if (ngen > 0) {
    const std::size_t cap = 200;
    std::size_t total = ngen * ngen;
    std::size_t stride = std::max<std::size_t>(1, total / cap);
    std::vector<double> norms(ngen);
    for (std::size_t i = 0; i < ngen; ++i) {
      norms[i] = op_norm(gen_value(b, gens[i]));
    }
    for (std::size_t flat = 0; flat < total; flat += stride) {
      std::size_t i = flat % ngen;
      std::size_t j = flat / ngen;
      CMatrix prod = gen_value(b, gens[i]) * gen_value(b, gens[j]);
      double bound = norms[i] * norms[j];
      norm_defect = std::max(
          norm_defect, rel(std::max(0.0, op_norm(prod) - bound), bound));
    }
    for (std::size_t i = 0; i < ngen; ++i) {
      double adj_norm = op_norm(gen_value(b, gens[i]).adjoint());
      norm_defect = std::max(norm_defect,
                             rel(std::abs(adj_norm - norms[i]), norms[i]));
    }
  }
  cert.add("Axiom.iii.norm", norm_defect, tol);

  // (iv) ‖b*b‖ = ‖b‖² per basis element.
  double cstar = 0.0;
  for (const Generator& g : gens) {
    const CMatrix& v = gen_value(b, g);
    double n = op_norm(v);
    double nn = op_norm(v.adjoint() * v);
    cstar = std::max(cstar, rel(std::abs(nn - n * n), n * n));
  }
  cert.add("Axiom.iv.cstar", cstar, tol);

  // (v) b*b has no negative spectrum.
  double positivity = 0.0;
  for (const Generator& g : gens) {
    const CMatrix& v = gen_value(b, g);
    positivity = std::max(positivity, negativity_defect(v.adjoint() * v));
  }
  cert.add("Axiom.v.positivity", positivity, tol);

  // Unit fiber: *-subalgebra containing every b·b* and b*·b.
  const Subspace& unit = b.fiber(b.group.identity());
  double unit_defect = 0.0;
  for (const CMatrix& x : unit.basis()) {
    unit_defect = std::max(unit_defect,
                           rel(unit.containment_defect(x.adjoint()),
                               x.frobenius_norm()));
    for (const CMatrix& y : unit.basis()) {
      CMatrix prod = x * y;
      unit_defect = std::max(unit_defect,
                             rel(unit.containment_defect(prod),
                                 prod.frobenius_norm()));
    }
  }
  for (const Generator& g : gens) {
    const CMatrix& v = gen_value(b, g);
    CMatrix left = v * v.adjoint();
    CMatrix right = v.adjoint() * v;
    unit_defect = std::max(unit_defect,
                           rel(unit.containment_defect(left),
                               left.frobenius_norm()));
    unit_defect = std::max(unit_defect,
                           rel(unit.containment_defect(right),
                               right.frobenius_norm()));
  }
  cert.add("UnitFiber.subalgebra", unit_defect, tol);

  // Informational: does B_t·B_t*·B_t recover B_t?  Not required by the
  // axioms, so this entry never gates the verdict.
  double saturation = 0.0;
  for (int t = 0; t < b.group.order(); ++t) {
    const Subspace& ft = b.fiber(t);
    if (ft.dim() == 0) continue;
    std::vector<CMatrix> pair_products;
    for (const CMatrix& x : ft.basis()) {
      for (const CMatrix& y : ft.basis()) {
        pair_products.push_back(x * y.adjoint());
      }
    }
    Subspace bb = Subspace::span(b.ambient_dim, pair_products);
    std::vector<CMatrix> triple_products;
    for (const CMatrix& u : bb.basis()) {
      for (const CMatrix& z : ft.basis()) {
        triple_products.push_back(u * z);
      }
    }
    Subspace bbb = Subspace::span(b.ambient_dim, triple_products);
    for (const CMatrix& z : ft.basis()) {
      saturation = std::max(saturation,
                            rel(bbb.containment_defect(z),
                                z.frobenius_norm()));
    }
  }
  cert.add_info("Saturation", saturation,
                "span(B_t·B_t*·B_t) ⊇ B_t; informational only");

  return cert;
}

FellBundle group_bundle(const FiniteGroup& g) {
  FellBundle b;
  b.group = g;
  b.ambient_dim = static_cast<std::size_t>(g.order());
  b.label = "group:" + g.name();
  std::vector<CMatrix> lambdas = left_regular(g);
  for (int t = 0; t < g.order(); ++t) {
    b.fibers.push_back(Subspace::span(b.ambient_dim, {lambdas[t]}));
  }
  return b;
}

CMatrix GlobalAction::apply(int t, const CMatrix& x) const {
  std::size_t m = x.rows();
  if (x.cols() != m || m * m != maps[static_cast<std::size_t>(t)].cols()) {
    raise(ErrorCode::DimensionMismatch,
          "action on M_" +
              std::to_string(static_cast<std::size_t>(
                  std::lround(std::sqrt(double(maps[0].cols()))))) +
              " applied to a " + std::to_string(x.rows()) + "x" +
              std::to_string(x.cols()) + " matrix");
  }
  const CMatrix& map = maps[static_cast<std::size_t>(t)];
  CMatrix out(m, m);
  // Row-major vectorization: vec(x)[i*m+j] = x.at(i,j), and x's flat storage
  // is already in that order.
  for (std::size_t r = 0; r < m * m; ++r) {
    Complex acc = 0.0;
    const Complex* row = &map[r * m * m];
    for (std::size_t c = 0; c < m * m; ++c) {
      acc += row[c] * x[c];
    }
    out[r] = acc;
  }
  return out;
}

void validate_global_action(const GlobalAction& a, double tol) {
  const int n = a.group.order();
  if (a.maps.size() != static_cast<std::size_t>(n)) {
    raise(ErrorCode::InvalidAction,
          "expected " + std::to_string(n) + " maps, got " +
              std::to_string(a.maps.size()));
  }
  std::size_t m = a.algebra.ambient_dim();
  for (int t = 0; t < n; ++t) {
    const CMatrix& map = a.maps[static_cast<std::size_t>(t)];
    if (map.rows() != m * m || map.cols() != m * m) {
      raise(ErrorCode::InvalidAction,
            "map " + std::to_string(t) + " is not " + std::to_string(m * m) +
                "x" + std::to_string(m * m));
    }
  }
  auto check = [&](double defect, double scale, const std::string& what) {
    if (rel(defect, scale) > tol) {
      raise(ErrorCode::InvalidAction, what);
    }
  };
  const std::vector<CMatrix>& basis = a.algebra.basis();
  for (int t = 0; t < n; ++t) {
    for (const CMatrix& x : basis) {
      CMatrix bx = a.apply(t, x);
      // Maps the algebra into itself.
      check(a.algebra.containment_defect(bx), bx.frobenius_norm(),
            "map " + std::to_string(t) + " does not preserve the algebra");
      // *-preserving.
      CMatrix star = a.apply(t, x.adjoint()) - bx.adjoint();
      check(star.frobenius_norm(), bx.frobenius_norm(),
            "map " + std::to_string(t) + " does not commute with the adjoint");
      // Multiplicative.
      for (const CMatrix& y : basis) {
        CMatrix lhs = a.apply(t, x * y);
        CMatrix rhs = bx * a.apply(t, y);
        check((lhs - rhs).frobenius_norm(),
              std::max(lhs.frobenius_norm(), rhs.frobenius_norm()),
              "map " + std::to_string(t) + " is not multiplicative");
      }
    }
    // Injectivity on the algebra (automorphism, not just endomorphism):
    // the images of the basis must again span a space of full dimension.
    std::vector<CMatrix> images;
    for (const CMatrix& x : basis) images.push_back(a.apply(t, x));
    if (Subspace::span(m, images).dim() != a.algebra.dim()) {
      raise(ErrorCode::InvalidAction,
            "map " + std::to_string(t) + " is not injective on the algebra");
    }
  }
  // β_e = id on the algebra.
  for (const CMatrix& x : basis) {
    CMatrix d = a.apply(a.group.identity(), x) - x;
    check(d.frobenius_norm(), x.frobenius_norm(),
          "identity map is not the identity on the algebra");
  }
  // β_s ∘ β_t = β_{st} on the algebra.
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int st = a.group.mul(s, t);
      for (const CMatrix& x : basis) {
        CMatrix lhs = a.apply(s, a.apply(t, x));
        CMatrix rhs = a.apply(st, x);
        check((lhs - rhs).frobenius_norm(), rhs.frobenius_norm(),
              "composite of maps " + std::to_string(s) + " and " +
                  std::to_string(t) + " differs from map " +
                  std::to_string(st));
      }
    }
  }
}

GlobalAction action_from_unitaries(const FiniteGroup& g,
                                   const Subspace& algebra,
                                   const std::vector<CMatrix>& unitaries) {
  if (unitaries.size() != static_cast<std::size_t>(g.order())) {
    raise(ErrorCode::InvalidAction,
          "expected one unitary per group element");
  }
  std::size_t m = algebra.ambient_dim();
  GlobalAction a;
  a.group = g;
  a.algebra = algebra;
  for (const CMatrix& u : unitaries) {
    if (u.rows() != m || u.cols() != m) {
      raise(ErrorCode::InvalidAction, "unitary dimension mismatch");
    }
    CMatrix uu = u * u.adjoint();
    CMatrix defect = uu - CMatrix::identity(m);
    if (defect.frobenius_norm() > 1e-9 * (1.0 + std::sqrt(double(m)))) {
      raise(ErrorCode::InvalidAction, "matrix is not unitary");
    }
    // Ad(u): x ↦ u x u*.  Row-major vec(AXB) = (A ⊗ Bᵀ) vec(X), so
    // Ad(u) = u ⊗ conj(u).
    a.maps.push_back(kron(u, u.conjugate()));
  }
  return a;
}

void validate_ideal(const GlobalAction& a, const Subspace& ideal,
                    double tol) {
  std::size_t m = a.algebra.ambient_dim();
  if (ideal.ambient_dim() != m) {
    raise(ErrorCode::NotAnIdeal, "ideal lives in the wrong matrix space");
  }
  for (const CMatrix& x : ideal.basis()) {
    if (rel(a.algebra.containment_defect(x), x.frobenius_norm()) > tol) {
      raise(ErrorCode::NotAnIdeal, "ideal is not contained in the algebra");
    }
    CMatrix adj = x.adjoint();
    if (rel(ideal.containment_defect(adj), adj.frobenius_norm()) > tol) {
      raise(ErrorCode::NotAnIdeal, "ideal is not closed under the adjoint");
    }
    for (const CMatrix& y : a.algebra.basis()) {
      CMatrix left = y * x;
      CMatrix right = x * y;
      if (rel(ideal.containment_defect(left), left.frobenius_norm()) > tol ||
          rel(ideal.containment_defect(right), right.frobenius_norm()) >
              tol) {
        raise(ErrorCode::NotAnIdeal,
              "ideal does not absorb multiplication by the algebra");
      }
    }
  }
}

Subspace intersect_ideals(const GlobalAction& a, const Subspace& ideal,
                          int t) {
  std::vector<CMatrix> images;
  for (const CMatrix& x : ideal.basis()) {
    images.push_back(a.apply(t, x));
  }
  Subspace beta_t = Subspace::span(ideal.ambient_dim(), images);
  return intersect(ideal, beta_t);
}

CMatrix covariant_embedding(const GlobalAction& a, const CMatrix& b) {
  std::size_t m = a.algebra.ambient_dim();
  std::size_t n = static_cast<std::size_t>(a.group.order());
  CMatrix out(m * n, m * n);
  for (std::size_t s = 0; s < n; ++s) {
    CMatrix block = a.apply(a.group.inv(static_cast<int>(s)), b);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        out.at(i * n + s, j * n + s) = block.at(i, j);
      }
    }
  }
  return out;
}

CMatrix covariant_unitary(const GlobalAction& a, int t) {
  std::size_t m = a.algebra.ambient_dim();
  std::vector<CMatrix> lambdas = left_regular(a.group);
  return kron(CMatrix::identity(m), lambdas[static_cast<std::size_t>(t)]);
}

namespace {

FellBundle covariant_bundle(const GlobalAction& a,
                            const std::vector<Subspace>& coefficient_spaces,
                            const std::string& label) {
  std::size_t m = a.algebra.ambient_dim();
  std::size_t n = static_cast<std::size_t>(a.group.order());
  FellBundle out;
  out.group = a.group;
  out.ambient_dim = m * n;
  out.label = label;
  for (int t = 0; t < a.group.order(); ++t) {
    std::vector<CMatrix> spanning;
    const CMatrix ut = covariant_unitary(a, t);
    for (const CMatrix& b : coefficient_spaces[static_cast<std::size_t>(t)]
                                .basis()) {
      spanning.push_back(covariant_embedding(a, b) * ut);
    }
    out.fibers.push_back(Subspace::span(out.ambient_dim, spanning));
  }
  return out;
}

}  // namespace

FellBundle semidirect_bundle(const GlobalAction& a) {
  validate_global_action(a);
  std::vector<Subspace> coeffs(static_cast<std::size_t>(a.group.order()),
                               a.algebra);
  return covariant_bundle(a, coeffs, "semidirect:" + a.group.name());
}

FellBundle partial_action_bundle(const PartialActionData& p) {
  validate_global_action(p.action);
  validate_ideal(p.action, p.ideal);
  std::vector<Subspace> coeffs;
  for (int t = 0; t < p.action.group.order(); ++t) {
    coeffs.push_back(intersect_ideals(p.action, p.ideal, t));
  }
  return covariant_bundle(p.action, coeffs, "partial:" + p.action.group.name());
}

}  // namespace fellkit
