#include "fellkit/coaction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/error.hpp"

namespace fellkit {
namespace {

constexpr double kMembershipTol = 1e-9;

double rel(double defect, double scale) { return defect / (1.0 + scale); }

// One nonzero coefficient of a basis image: δ(a_j) ∋ v · a_p ⊗ λ_t.
struct Term {
  std::size_t p;
  int t;
  Complex v;
};

std::vector<std::vector<Term>> nonzero_terms(const Coaction& c) {
  const std::size_t k = c.dim();
  const std::size_t order = static_cast<std::size_t>(c.group.order());
  std::vector<std::vector<Term>> nz(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t t = 0; t < order; ++t) {
        const Complex v = c.kappa[j].at(p, t);
        if (std::norm(v) != 0.0) {
          nz[j].push_back(Term{p, static_cast<int>(t), v});
        }
      }
    }
  }
  return nz;
}

// ‖Σ_j coeffs_j · R_j‖ via the stored Gram matrix of the off-span parts.
double offspan_norm(const Coaction& c, const std::vector<Complex>& coeffs) {
  const std::size_t k = c.dim();
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::norm(coeffs[i]) == 0.0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      acc += std::conj(coeffs[i]) * c.offspan_gram.at(i, j) * coeffs[j];
    }
  }
  return std::sqrt(std::max(0.0, acc.real()));
}

// ‖Σ_{l,u} z(l,u)·a_l⊗λ_u‖_F = √|G|·‖z‖_F when the a_l are orthonormal.
double coeff_norm(const CMatrix& z, int order) {
  return std::sqrt(static_cast<double>(order)) * z.frobenius_norm();
}

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

std::vector<Complex> algebra_coords(const Coaction& c, const CMatrix& a,
                                    const std::string& op,
                                    double tol = kMembershipTol) {
  if (a.rows() != c.coeff_dim || a.cols() != c.coeff_dim) {
    raise(ErrorCode::DimensionMismatch,
          op + ": element is " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + ", algebra ambient is " +
              std::to_string(c.coeff_dim));
  }
  const double defect = c.algebra.containment_defect(a);
  if (defect > tol * (1.0 + a.frobenius_norm())) {
    raise(ErrorCode::NotInAlgebra,
          op + ": element has off-algebra defect " + std::to_string(defect));
  }
  return c.algebra.coordinates(a);
}

// Coefficient matrix w(p,t) of δ(a) for a = Σ_i coords_i·a_i; column t
// holds the coordinates of E_t(a).
CMatrix delta_coeffs(const Coaction& c, const std::vector<Complex>& coords) {
  const std::size_t k = c.dim();
  const std::size_t order = static_cast<std::size_t>(c.group.order());
  CMatrix w(k, order);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::norm(coords[i]) == 0.0) continue;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t t = 0; t < order; ++t) {
        w.at(p, t) += coords[i] * c.kappa[i].at(p, t);
      }
    }
  }
  return w;
}

CMatrix materialize(const Coaction& c, const std::vector<Complex>& coeffs) {
  const auto& basis = c.algebra.basis();
  CMatrix out(c.coeff_dim, c.coeff_dim);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (std::norm(coeffs[p]) == 0.0) continue;
    out += coeffs[p] * basis[p];
  }
  return out;
}

void require_element(const FiniteGroup& g, int t, const std::string& op) {
  if (t < 0 || t >= static_cast<int>(g.order())) {
    raise(ErrorCode::BadParameter,
          op + ": group element " + std::to_string(t) +
              " out of range for order " + std::to_string(g.order()));
  }
}

// Shared scaffold for the coactions living on span{λ_t} ⊆ M_|G|.
Coaction lambda_algebra_coaction(const FiniteGroup& g, std::string label) {
  const int order = g.order();
  const double root = std::sqrt(static_cast<double>(order));
  std::vector<CMatrix> basis = left_regular(g);
  for (CMatrix& b : basis) b *= Complex(1.0 / root, 0.0);
  Coaction c;
  c.group = g;
  c.algebra = Subspace::from_orthonormal(static_cast<std::size_t>(order),
                                         std::move(basis));
  c.coeff_dim = static_cast<std::size_t>(order);
  c.label = std::move(label);
  closure_tables(c.algebra, kMembershipTol, &c.mult, &c.star);
  const std::size_t k = c.dim();
  c.kappa.assign(k, CMatrix(k, static_cast<std::size_t>(order)));
  c.offspan_gram = CMatrix(k, k);
  return c;
}

}  // namespace

Coaction make_coaction(const FiniteGroup& g, const Subspace& algebra,
                       const std::vector<CMatrix>& images, std::string label,
                       double tol) {
  const std::size_t k = algebra.dim();
  const std::size_t d = algebra.ambient_dim();
  const int order = g.order();
  const std::size_t big = d * static_cast<std::size_t>(order);
  if (images.size() != k) {
    raise(ErrorCode::DimensionMismatch,
          "make_coaction: " + std::to_string(images.size()) +
              " images for an algebra of dimension " + std::to_string(k));
  }
  for (const CMatrix& x : images) {
    if (x.rows() != big || x.cols() != big) {
      raise(ErrorCode::DimensionMismatch,
            "make_coaction: image is " + std::to_string(x.rows()) + "x" +
                std::to_string(x.cols()) + ", expected " +
                std::to_string(big) + "x" + std::to_string(big));
    }
  }

  Coaction c;
  c.group = g;
  c.algebra = algebra;
  c.coeff_dim = d;
  c.label = std::move(label);
  closure_tables(algebra, tol, &c.mult, &c.star);

  const std::vector<CMatrix> lambdas = left_regular(g);
  c.kappa.assign(k, CMatrix(k, static_cast<std::size_t>(order)));
  std::vector<CMatrix> rests;
  rests.reserve(k);
  double worst = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    CMatrix rest = images[j];
    for (int t = 0; t < order; ++t) {
      // λ_t-coefficient of the image: the average over s of the blocks at
      // block-row t·s, block-column s.
      CMatrix y(d, d);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          Complex acc(0.0, 0.0);
          for (int s = 0; s < order; ++s) {
            acc += images[j].at(
                a * static_cast<std::size_t>(order) +
                    static_cast<std::size_t>(g.mul(t, s)),
                b * static_cast<std::size_t>(order) +
                    static_cast<std::size_t>(s));
          }
          y.at(a, b) = acc * Complex(1.0 / order, 0.0);
        }
      }
      const std::vector<Complex> coords = algebra.coordinates(y);
      for (std::size_t p = 0; p < k; ++p) {
        c.kappa[j].at(p, static_cast<std::size_t>(t)) = coords[p];
      }
      rest -= kron(algebra.project(y), lambdas[static_cast<std::size_t>(t)]);
    }
    worst = std::max(worst, rel(rest.frobenius_norm(),
                                images[j].frobenius_norm()));
    rests.push_back(std::move(rest));
  }
  c.span_defect = worst;
  c.offspan_gram = CMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      c.offspan_gram.at(i, j) = hs_inner(rests[i], rests[j]);
    }
  }
  return c;
}

Coaction trivial_coaction(const FiniteGroup& g, const Subspace& algebra,
                          double tol) {
  Coaction c;
  c.group = g;
  c.algebra = algebra;
  c.coeff_dim = algebra.ambient_dim();
  c.label = "trivial:" + g.name();
  closure_tables(algebra, tol, &c.mult, &c.star);
  const std::size_t k = algebra.dim();
  c.kappa.assign(k, CMatrix(k, static_cast<std::size_t>(g.order())));
  for (std::size_t j = 0; j < k; ++j) {
    c.kappa[j].at(j, static_cast<std::size_t>(g.identity())) =
        Complex(1.0, 0.0);
  }
  c.offspan_gram = CMatrix(k, k);
  return c;
}

Coaction comultiplication_coaction(const FiniteGroup& g) {
  Coaction c = lambda_algebra_coaction(g, "comultiplication:" + g.name());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    c.kappa[j].at(j, j) = Complex(1.0, 0.0);
  }
  return c;
}

Coaction flip_coaction(const FiniteGroup& g) {
  Coaction c = lambda_algebra_coaction(g, "flip:" + g.name());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    c.kappa[j].at(j, static_cast<std::size_t>(g.inv(static_cast<int>(j)))) =
        Complex(1.0, 0.0);
  }
  return c;
}

Coaction projection_coaction(const FiniteGroup& g) {
  Coaction c = lambda_algebra_coaction(g, "projection:" + g.name());
  const std::size_t order = static_cast<std::size_t>(g.order());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    for (std::size_t t = 0; t < order; ++t) {
      c.kappa[j].at(j, t) = Complex(1.0 / static_cast<double>(order), 0.0);
    }
  }
  return c;
}

Coaction dual_coaction(const BundleAlgebra& alg) {
  const FiniteGroup& g = alg.bundle->group;
  const int order = g.order();
  const std::size_t k = alg.generators.size();
  const double root = std::sqrt(static_cast<double>(order));

  std::vector<CMatrix> basis;
  basis.reserve(k);
  for (const CMatrix& gen : alg.generators) {
    basis.push_back(Complex(1.0 / root, 0.0) * gen);
  }

  Coaction c;
  c.group = g;
  c.algebra = Subspace::from_orthonormal(alg.rep_dim, std::move(basis));
  c.coeff_dim = alg.rep_dim;
  c.label = "dual:" + alg.bundle->label;
  c.kappa.assign(k, CMatrix(k, static_cast<std::size_t>(order)));
  for (std::size_t j = 0; j < k; ++j) {
    c.kappa[j].at(j, static_cast<std::size_t>(alg.generator_index[j].first)) =
        Complex(1.0, 0.0);
  }

  // Structure constants through fiber products: the generators multiply
  // gradewise, (b⊗λ_t)(b'⊗λ_s) = bb'⊗λ_{ts}, so the tables come from the
  // small ambient space of the bundle instead of the representation space.
  c.mult.assign(k, CMatrix(k, k));
  c.star = CMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const int t = alg.generator_index[i].first;
    const CMatrix& bi =
        alg.bundle->fiber(t).basis()[alg.generator_index[i].second];
    const int tinv = g.inv(t);
    const std::vector<Complex> acoords =
        alg.bundle->fiber(tinv).coordinates(bi.adjoint());
    for (std::size_t q = 0; q < acoords.size(); ++q) {
      c.star.at(i, alg.generator_at(tinv, q)) = acoords[q];
    }
    for (std::size_t j = 0; j < k; ++j) {
      const int s = alg.generator_index[j].first;
      const CMatrix& bj =
          alg.bundle->fiber(s).basis()[alg.generator_index[j].second];
      const int ts = g.mul(t, s);
      const std::vector<Complex> coords =
          alg.bundle->fiber(ts).coordinates(bi * bj);
      for (std::size_t q = 0; q < coords.size(); ++q) {
        c.mult[i].at(j, alg.generator_at(ts, q)) =
            coords[q] * Complex(1.0 / root, 0.0);
      }
    }
  }
  c.offspan_gram = CMatrix(k, k);
  return c;
}

Certificate check_coaction(const Coaction& c, double tol) {
  Certificate cert;
  cert.suite = "coaction";
  cert.fixture = c.label;
  cert.tolerance = tol;
  const FiniteGroup& g = c.group;
  const int order = g.order();
  const std::size_t uorder = static_cast<std::size_t>(order);
  const std::size_t k = c.dim();

  cert.add("Coaction.span", c.span_defect, tol,
           "image of every basis element lies in A ⊗ span{λ_t}");
  const std::string suffix = (c.span_defect > tol)
                                 ? "; computed on the span-projected image"
                                 : "";

  const std::vector<std::vector<Term>> nz = nonzero_terms(c);

  // Multiplicativity over all basis pairs.
  double worst_hom = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      CMatrix lhs(k, uorder);
      CMatrix rhs(k, uorder);
      for (std::size_t m = 0; m < k; ++m) {
        const Complex cm = c.mult[i].at(j, m);
        if (std::norm(cm) == 0.0) continue;
        for (std::size_t p = 0; p < k; ++p) {
          for (std::size_t t = 0; t < uorder; ++t) {
            lhs.at(p, t) += cm * c.kappa[m].at(p, t);
          }
        }
      }
      for (const Term& a : nz[i]) {
        for (const Term& b : nz[j]) {
          const std::size_t u = static_cast<std::size_t>(g.mul(a.t, b.t));
          const Complex w = a.v * b.v;
          for (std::size_t l = 0; l < k; ++l) {
            rhs.at(l, u) += w * c.mult[a.p].at(b.p, l);
          }
        }
      }
      const double num = coeff_norm(lhs - rhs, order);
      const double scale =
          std::max(coeff_norm(lhs, order), coeff_norm(rhs, order));
      worst_hom = std::max(worst_hom, rel(num, scale));
    }
  }
  cert.add("Coaction.hom", worst_hom, tol,
           "δ(ab) = δ(a)δ(b) over all basis pairs" + suffix);

  // Compatibility with the involution.
  double worst_star = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    CMatrix lhs(k, uorder);
    CMatrix rhs(k, uorder);
    for (std::size_t m = 0; m < k; ++m) {
      const Complex cm = c.star.at(j, m);
      if (std::norm(cm) == 0.0) continue;
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t t = 0; t < uorder; ++t) {
          lhs.at(p, t) += cm * c.kappa[m].at(p, t);
        }
      }
    }
    for (const Term& a : nz[j]) {
      const std::size_t u = static_cast<std::size_t>(g.inv(a.t));
      for (std::size_t l = 0; l < k; ++l) {
        rhs.at(l, u) += std::conj(a.v) * c.star.at(a.p, l);
      }
    }
    const double num = coeff_norm(lhs - rhs, order);
    const double scale =
        std::max(coeff_norm(lhs, order), coeff_norm(rhs, order));
    worst_star = std::max(worst_star, rel(num, scale));
  }
  cert.add("Coaction.star", worst_star, tol, "δ(a*) = δ(a)*" + suffix);

  // Coassociativity against Δ̂(λ_t) = λ_t ⊗ λ_t, in the basis
  // a_p ⊗ λ_s ⊗ λ_t whose elements have Frobenius norm |G|.
  double worst_co = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Complex> c1(k * uorder * uorder, Complex(0.0, 0.0));
    std::vector<Complex> c2(k * uorder * uorder, Complex(0.0, 0.0));
    for (const Term& outer : nz[j]) {
      const std::size_t t = static_cast<std::size_t>(outer.t);
      for (const Term& inner : nz[outer.p]) {
        const std::size_t s = static_cast<std::size_t>(inner.t);
        c1[(inner.p * uorder + s) * uorder + t] += outer.v * inner.v;
      }
      c2[(outer.p * uorder + t) * uorder + t] += outer.v;
    }
    double num2 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t idx = 0; idx < c1.size(); ++idx) {
      num2 += std::norm(c1[idx] - c2[idx]);
      s1 += std::norm(c1[idx]);
      s2 += std::norm(c2[idx]);
    }
    const double num = order * std::sqrt(num2);
    const double scale = order * std::sqrt(std::max(s1, s2));
    worst_co = std::max(worst_co, rel(num, scale));
  }
  cert.add("Coaction.coassoc", worst_co, tol,
           "(δ⊗id)∘δ = (id⊗Δ̂)∘δ" + suffix);

  // Density: δ(A)(1⊗λ_t) must span A ⊗ span{λ_t}.
  std::vector<std::vector<Complex>> cols;
  cols.reserve(k * uorder);
  for (std::size_t j = 0; j < k; ++j) {
    for (int t = 0; t < order; ++t) {
      std::vector<Complex> col(k * uorder, Complex(0.0, 0.0));
      for (const Term& a : nz[j]) {
        col[a.p * uorder + static_cast<std::size_t>(g.mul(a.t, t))] += a.v;
      }
      cols.push_back(std::move(col));
    }
  }
  const std::size_t rank = orthonormal_columns(cols).size();
  const std::size_t full = k * uorder;
  const double density = full == 0 ? 0.0
                                   : static_cast<double>(full - rank) /
                                         static_cast<double>(full);
  cert.add("Coaction.podles", density, tol,
           "δ(A)(1⊗λ) spans " + std::to_string(rank) + " of " +
               std::to_string(full) + " dimensions" + suffix);
  return cert;
}

bool coaction_injective(const Coaction& c, double rank_tol) {
  const std::size_t k = c.dim();
  const std::size_t uorder = static_cast<std::size_t>(c.group.order());
  CMatrix stacked(k * uorder, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t t = 0; t < uorder; ++t) {
        stacked.at(p * uorder + t, i) = c.kappa[i].at(p, t);
      }
    }
  }
  return numeric_rank(stacked, rank_tol) == k;
}

CMatrix coaction_apply(const Coaction& c, const CMatrix& a) {
  const std::vector<Complex> coords = algebra_coords(c, a, "coaction_apply");
  const CMatrix w = delta_coeffs(c, coords);
  const FiniteGroup& g = c.group;
  const int order = g.order();
  const std::size_t uorder = static_cast<std::size_t>(order);
  const std::size_t d = c.coeff_dim;
  const std::size_t k = c.dim();
  CMatrix out(d * uorder, d * uorder);
  for (int t = 0; t < order; ++t) {
    std::vector<Complex> column(k);
    for (std::size_t p = 0; p < k; ++p) {
      column[p] = w.at(p, static_cast<std::size_t>(t));
    }
    const CMatrix y = materialize(c, column);
    if (y.max_abs() == 0.0) continue;
    for (int s = 0; s < order; ++s) {
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          out.at(i * uorder + row_block,
                 j * uorder + static_cast<std::size_t>(s)) += y.at(i, j);
        }
      }
    }
  }
  return out;
}

CMatrix fourier_coeff(const Coaction& c, const CMatrix& a, int t) {
  require_element(c.group, t, "fourier_coeff");
  const std::vector<Complex> coords = algebra_coords(c, a, "fourier_coeff");
  const std::size_t k = c.dim();
  std::vector<Complex> w(k, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    if (std::norm(coords[i]) == 0.0) continue;
    for (std::size_t p = 0; p < k; ++p) {
      w[p] += coords[i] * c.kappa[i].at(p, static_cast<std::size_t>(t));
    }
  }
  return materialize(c, w);
}

CMatrix average(const Coaction& c, const CMatrix& a) {
  return fourier_coeff(c, a, c.group.identity());
}

Subspace spectral_subspace(const Coaction& c, int t) {
  require_element(c.group, t, "spectral_subspace");
  const std::size_t k = c.dim();
  const std::size_t uorder = static_cast<std::size_t>(c.group.order());
  CMatrix constraint(k * uorder, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t u = 0; u < uorder; ++u) {
        Complex v = c.kappa[i].at(p, u);
        if (i == p && u == static_cast<std::size_t>(t)) v -= 1.0;
        constraint.at(p * uorder + u, i) = v;
      }
    }
  }
  const std::vector<std::vector<Complex>> kernel = kernel_vectors(constraint);
  std::vector<CMatrix> members;
  members.reserve(kernel.size());
  for (const std::vector<Complex>& coords : kernel) {
    members.push_back(materialize(c, coords));
  }
  return Subspace::span(c.coeff_dim, members);
}

double spectral_membership_defect(const Coaction& c, const CMatrix& m, int t,
                                  double tol) {
  require_element(c.group, t, "spectral_membership_defect");
  algebra_coords(c, m, "spectral_membership_defect", tol);
  const Subspace sub = spectral_subspace(c, t);
  return rel(sub.containment_defect(m), m.frobenius_norm());
}

CMatrix fs_action(const ScalarFn& u, const Coaction& c, const CMatrix& a) {
  const std::size_t uorder = static_cast<std::size_t>(c.group.order());
  if (u.size() != uorder) {
    raise(ErrorCode::DimensionMismatch,
          "fs_action: function has " + std::to_string(u.size()) +
              " values, group order is " + std::to_string(uorder));
  }
  const std::vector<Complex> coords = algebra_coords(c, a, "fs_action");
  const std::size_t k = c.dim();
  std::vector<Complex> out(k, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    if (std::norm(coords[i]) == 0.0) continue;
    for (std::size_t p = 0; p < k; ++p) {
      Complex acc(0.0, 0.0);
      for (std::size_t t = 0; t < uorder; ++t) {
        acc += c.kappa[i].at(p, t) * u[t];
      }
      out[p] += coords[i] * acc;
    }
  }
  return materialize(c, out);
}

Certificate coaction_inversion(const Coaction& c, const CMatrix& a,
                               double tol, std::size_t samples,
                               std::uint64_t seed) {
  Certificate cert;
  cert.suite = "inversion";
  cert.fixture = c.label;
  cert.tolerance = tol;
  cert.seed = seed;
  cert.samples = static_cast<int>(samples);

  const FiniteGroup& g = c.group;
  const int order = g.order();
  const std::size_t uorder = static_cast<std::size_t>(order);
  const std::size_t k = c.dim();
  const std::vector<Complex> coords =
      algebra_coords(c, a, "coaction_inversion");
  const CMatrix w = delta_coeffs(c, coords);

  // δ(a) and Σ_t E_t(a)⊗λ_t share every coefficient over A ⊗ span{λ_t},
  // so the reassembly residual is exactly the off-span part of δ(a).
  const double off = offspan_norm(c, coords);
  const double wnorm = coeff_norm(w, order);
  cert.add("Thm.FourierInversion.i",
           rel(off, std::sqrt(wnorm * wnorm + off * off)), tol,
           "δ(a) = Σ_t E_t(a)⊗λ_t (Fourier series reassembly)");

  std::vector<Complex> recon(k, Complex(0.0, 0.0));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t t = 0; t < uorder; ++t) recon[p] += w.at(p, t);
  }
  const double r2 = rel(vec_dist(coords, recon), vec_norm(coords));
  CMatrix stacked(k * uorder, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t t = 0; t < uorder; ++t) {
        stacked.at(p * uorder + t, i) = c.kappa[i].at(p, t);
      }
    }
  }
  const std::size_t rank = numeric_rank(stacked);
  if (rank == k) {
    cert.add("Thm.FourierInversion.ii", r2, tol,
             "a = Σ_t E_t(a); δ injective (coefficient rank " +
                 std::to_string(rank) + " of " + std::to_string(k) + ")");
  } else {
    cert.add_info(
        "Thm.FourierInversion.ii", r2,
        "δ not injective (coefficient rank " + std::to_string(rank) + " of " +
            std::to_string(k) +
            "); reconstruction not asserted — Rem.InjectivityNecessary: the "
            "injectivity hypothesis is really necessary");
  }

  // Smoothed reconstruction holds without injectivity: u∗a lands where the
  // Fourier series converges to the element itself.
  std::mt19937_64 rng(seed);
  const auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  double worst3 = 0.0;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    ScalarFn u(uorder);
    for (std::size_t t = 0; t < uorder; ++t) {
      u[t] = Complex(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
    }
    const CMatrix b = fs_action(u, c, a);
    const std::vector<Complex> bcoords = c.algebra.coordinates(b);
    const CMatrix wb = delta_coeffs(c, bcoords);
    std::vector<Complex> brecon(k, Complex(0.0, 0.0));
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t t = 0; t < uorder; ++t) brecon[p] += wb.at(p, t);
    }
    worst3 = std::max(worst3, rel(vec_dist(bcoords, brecon),
                                  vec_norm(bcoords)));
  }
  cert.add("Thm.FourierInversion.iii", worst3, tol,
           "u∗a = Σ_t E_t(u∗a) over " + std::to_string(samples) +
               " sampled u");
  return cert;
}

Certificate prop020_check(const Coaction& c, const CMatrix& a,
                          const CMatrix& b, const CMatrix& m, int s, int t,
                          double tol) {
  const FiniteGroup& g = c.group;
  require_element(g, s, "prop020_check");
  require_element(g, t, "prop020_check");
  const double mem = spectral_membership_defect(c, m, s, tol);
  if (mem > tol) {
    raise(ErrorCode::NotSpectral,
          "prop020_check: m has relative distance " + std::to_string(mem) +
              " to the spectral subspace at element " + std::to_string(s));
  }

  Certificate cert;
  cert.suite = "prop020";
  cert.fixture = c.label;
  cert.tolerance = tol;
  cert.add_info("Prop020.membership", mem,
                "m certified inside the spectral subspace at " +
                    std::to_string(s) + " (precondition)");

  const auto rel_pair = [](const CMatrix& lhs, const CMatrix& rhs) {
    return rel((lhs - rhs).frobenius_norm(),
               std::max(lhs.frobenius_norm(), rhs.frobenius_norm()));
  };

  const CMatrix eta = fourier_coeff(c, a, t);
  const CMatrix esb = fourier_coeff(c, b, s);

  cert.add("Prop020.i",
           rel_pair(eta.adjoint(), fourier_coeff(c, a.adjoint(), g.inv(t))),
           tol, "E_t(a)* = E_{t⁻¹}(a*)");
  cert.add("Prop020.ii",
           rel_pair(m * eta, fourier_coeff(c, m * a, g.mul(s, t))), tol,
           "m·E_t(a) = E_{st}(m·a) for m spectral at s");
  cert.add("Prop020.iii",
           rel_pair(eta * m, fourier_coeff(c, a * m, g.mul(t, s))), tol,
           "E_t(a)·m = E_{ts}(a·m)");
  const CMatrix lhs4 = eta * esb;
  const CMatrix r1 = fourier_coeff(c, eta * b, g.mul(t, s));
  const CMatrix r2 = fourier_coeff(c, a * esb, g.mul(t, s));
  cert.add("Prop020.iv", std::max(rel_pair(lhs4, r1), rel_pair(lhs4, r2)),
           tol, "E_t(a)·E_s(b) = E_{ts}(E_t(a)·b) = E_{ts}(a·E_s(b))");
  return cert;
}

Certificate pushforward_check(const Coaction& c_a, const Coaction& c_b,
                              const std::vector<CMatrix>& pi_images,
                              const CMatrix& a, double tol) {
  if (!c_a.group.same_table(c_b.group)) {
    raise(ErrorCode::BadParameter,
          "pushforward_check: coactions live over different groups");
  }
  const FiniteGroup& g = c_a.group;
  const int order = g.order();
  const std::size_t uorder = static_cast<std::size_t>(order);
  const std::size_t ka = c_a.dim();
  const std::size_t kb = c_b.dim();
  if (pi_images.size() != ka) {
    raise(ErrorCode::DimensionMismatch,
          "pushforward_check: " + std::to_string(pi_images.size()) +
              " images for a domain algebra of dimension " +
              std::to_string(ka));
  }
  for (const CMatrix& x : pi_images) {
    if (x.rows() != c_b.coeff_dim || x.cols() != c_b.coeff_dim) {
      raise(ErrorCode::DimensionMismatch,
            "pushforward_check: image is " + std::to_string(x.rows()) + "x" +
                std::to_string(x.cols()) + ", target ambient is " +
                std::to_string(c_b.coeff_dim));
    }
  }

  // Coordinates of π on the domain basis; containment in the target algebra
  // is part of π being a homomorphism *into* B.
  CMatrix pmat(kb, ka);
  for (std::size_t i = 0; i < ka; ++i) {
    const double defect = c_b.algebra.containment_defect(pi_images[i]);
    if (defect > tol * (1.0 + pi_images[i].frobenius_norm())) {
      raise(ErrorCode::NotHomomorphism,
            "pushforward_check: image of basis element " + std::to_string(i) +
                " leaves the target algebra (defect " +
                std::to_string(defect) + ")");
    }
    const std::vector<Complex> coords =
        c_b.algebra.coordinates(pi_images[i]);
    for (std::size_t l = 0; l < kb; ++l) pmat.at(l, i) = coords[l];
  }

  // Sparse view of the target structure constants.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Complex>>>>
      nzmult(kb);
  for (std::size_t p = 0; p < kb; ++p) {
    nzmult[p].resize(kb);
    for (std::size_t q = 0; q < kb; ++q) {
      for (std::size_t l = 0; l < kb; ++l) {
        const Complex v = c_b.mult[p].at(q, l);
        if (std::norm(v) != 0.0) nzmult[p][q].emplace_back(l, v);
      }
    }
  }

  std::vector<Complex> lhs(kb);
  std::vector<Complex> rhs(kb);
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t j = 0; j < ka; ++j) {
      std::fill(lhs.begin(), lhs.end(), Complex(0.0, 0.0));
      std::fill(rhs.begin(), rhs.end(), Complex(0.0, 0.0));
      for (std::size_t p = 0; p < kb; ++p) {
        const Complex vp = pmat.at(p, i);
        if (std::norm(vp) == 0.0) continue;
        for (std::size_t q = 0; q < kb; ++q) {
          const Complex w = vp * pmat.at(q, j);
          if (std::norm(w) == 0.0) continue;
          for (const auto& [l, v] : nzmult[p][q]) lhs[l] += w * v;
        }
      }
      for (std::size_t m = 0; m < ka; ++m) {
        const Complex cm = c_a.mult[i].at(j, m);
        if (std::norm(cm) == 0.0) continue;
        for (std::size_t l = 0; l < kb; ++l) rhs[l] += cm * pmat.at(l, m);
      }
      const double defect = rel(vec_dist(lhs, rhs),
                                std::max(vec_norm(lhs), vec_norm(rhs)));
      if (defect > tol) {
        raise(ErrorCode::NotHomomorphism,
              "pushforward_check: π(a_i)π(a_j) ≠ π(a_i·a_j) at pair (" +
                  std::to_string(i) + "," + std::to_string(j) +
                  "), relative defect " + std::to_string(defect));
      }
    }
  }
  for (std::size_t i = 0; i < ka; ++i) {
    std::fill(lhs.begin(), lhs.end(), Complex(0.0, 0.0));
    std::fill(rhs.begin(), rhs.end(), Complex(0.0, 0.0));
    for (std::size_t m = 0; m < ka; ++m) {
      const Complex cm = c_a.star.at(i, m);
      if (std::norm(cm) == 0.0) continue;
      for (std::size_t l = 0; l < kb; ++l) lhs[l] += cm * pmat.at(l, m);
    }
    for (std::size_t p = 0; p < kb; ++p) {
      const Complex z = std::conj(pmat.at(p, i));
      if (std::norm(z) == 0.0) continue;
      for (std::size_t l = 0; l < kb; ++l) rhs[l] += z * c_b.star.at(p, l);
    }
    const double defect = rel(vec_dist(lhs, rhs),
                              std::max(vec_norm(lhs), vec_norm(rhs)));
    if (defect > tol) {
      raise(ErrorCode::NotHomomorphism,
            "pushforward_check: π(a_i*) ≠ π(a_i)* at element " +
                std::to_string(i) + ", relative defect " +
                std::to_string(defect));
    }
  }

  for (std::size_t i = 0; i < ka; ++i) {
    CMatrix lmat(kb, uorder);
    CMatrix rmat(kb, uorder);
    for (std::size_t p = 0; p < ka; ++p) {
      for (std::size_t t = 0; t < uorder; ++t) {
        const Complex v = c_a.kappa[i].at(p, t);
        if (std::norm(v) == 0.0) continue;
        for (std::size_t l = 0; l < kb; ++l) {
          lmat.at(l, t) += v * pmat.at(l, p);
        }
      }
    }
    for (std::size_t j = 0; j < kb; ++j) {
      const Complex v = pmat.at(j, i);
      if (std::norm(v) == 0.0) continue;
      for (std::size_t l = 0; l < kb; ++l) {
        for (std::size_t t = 0; t < uorder; ++t) {
          rmat.at(l, t) += v * c_b.kappa[j].at(l, t);
        }
      }
    }
    const double defect =
        rel(coeff_norm(lmat - rmat, order),
            std::max(coeff_norm(lmat, order), coeff_norm(rmat, order)));
    if (defect > tol) {
      raise(ErrorCode::NotEquivariant,
            "pushforward_check: (π⊗id)∘δ_A ≠ δ_B∘π on basis element " +
                std::to_string(i) + ", relative defect " +
                std::to_string(defect));
    }
  }

  Certificate cert;
  cert.suite = "pushforward";
  cert.fixture = c_a.label + "→" + c_b.label;
  cert.tolerance = tol;

  const std::vector<Complex> coords_a =
      algebra_coords(c_a, a, "pushforward_check");
  const CMatrix wa = delta_coeffs(c_a, coords_a);
  std::vector<Complex> ca_b(kb, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < ka; ++i) {
    if (std::norm(coords_a[i]) == 0.0) continue;
    for (std::size_t l = 0; l < kb; ++l) {
      ca_b[l] += coords_a[i] * pmat.at(l, i);
    }
  }
  const CMatrix wb = delta_coeffs(c_b, ca_b);

  double worst = 0.0;
  double at_identity = 0.0;
  for (std::size_t t = 0; t < uorder; ++t) {
    std::vector<Complex> pushed(kb, Complex(0.0, 0.0));
    std::vector<Complex> direct(kb);
    for (std::size_t p = 0; p < ka; ++p) {
      const Complex v = wa.at(p, t);
      if (std::norm(v) == 0.0) continue;
      for (std::size_t l = 0; l < kb; ++l) pushed[l] += v * pmat.at(l, p);
    }
    for (std::size_t l = 0; l < kb; ++l) direct[l] = wb.at(l, t);
    const double r = rel(vec_dist(pushed, direct),
                         std::max(vec_norm(pushed), vec_norm(direct)));
    worst = std::max(worst, r);
    if (t == static_cast<std::size_t>(g.identity())) at_identity = r;
  }
  cert.add("Prop.CompatibilitySpectralElements", worst, tol,
           "E_t(π(a)) = π(E_t(a)) for every t "
           "(orthonormal-coordinate comparison)");
  cert.add("Prop.CompatibilitySpectralElements.Av", at_identity, tol,
           "Av(π(a)) = π(Av(a))");
  return cert;
}

Certificate w_unitary_check(const BundleAlgebra& alg, double tol) {
  const FiniteGroup& g = alg.bundle->group;
  const int order = g.order();
  const std::size_t uorder = static_cast<std::size_t>(order);

  Certificate cert;
  cert.suite = "w-unitary";
  cert.fixture = alg.bundle->label;
  cert.tolerance = tol;

  // W permutes basis vectors, (s,u) ↦ (s, s·u); a bijection on indices is
  // exactly unitarity for a 0/1 matrix with one entry per column.
  std::vector<char> hit(uorder * uorder, 0);
  bool bijective = true;
  for (int s = 0; s < order; ++s) {
    for (int u = 0; u < order; ++u) {
      const std::size_t idx = static_cast<std::size_t>(s) * uorder +
                              static_cast<std::size_t>(g.mul(s, u));
      if (hit[idx]) bijective = false;
      hit[idx] = 1;
    }
  }
  for (const char h : hit) {
    if (!h) bijective = false;
  }
  cert.add("W.unitary", bijective ? 0.0 : 1.0, tol,
           "W permutes the basis by (s,u) ↦ (s, s·u); bijective ⇒ unitary");

  // Conjugation by the permutation W sorts the entries of x⊗1 into
  // λ-blocks: W(x⊗1)W* = Σ_t X_t⊗λ_t with X_t the restriction of x to the
  // entries whose row/column group parts satisfy s·s'⁻¹ = t. The dual
  // coaction sends the generator graded at r to itself ⊗λ_r, so the two
  // sides differ exactly by the entries of x living off the t = r pattern,
  // each counted once on either side.
  double worst = 0.0;
  for (std::size_t idx = 0; idx < alg.generators.size(); ++idx) {
    const CMatrix& x = alg.generators[idx];
    const int r = alg.generator_index[idx].first;
    double off2 = 0.0;
    for (std::size_t row = 0; row < x.rows(); ++row) {
      const int s = static_cast<int>(row % uorder);
      for (std::size_t col = 0; col < x.cols(); ++col) {
        const Complex v = x.at(row, col);
        if (std::norm(v) == 0.0) continue;
        const int sp = static_cast<int>(col % uorder);
        if (g.mul(s, g.inv(sp)) != r) off2 += 2.0 * std::norm(v);
      }
    }
    const double num = std::sqrt(static_cast<double>(order) * off2);
    const double scale =
        x.frobenius_norm() * std::sqrt(static_cast<double>(order));
    worst = std::max(worst, rel(num, scale));
  }
  cert.add("W.conjugation", worst, tol,
           "δ(x) = W(x⊗1)W* on every generator, compared through the "
           "λ-block coefficients of both sides");
  return cert;
}

}  // namespace fellkit
