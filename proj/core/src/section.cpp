#include "fellkit/section.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

void require_same_bundle(const Section& x, const Section& y,
                         const char* what) {
  if (x.bundle != y.bundle) {
    raise(ErrorCode::BundleMismatch,
          std::string(what) + ": sections belong to different bundles");
  }
}

void require_bundle(const BundlePtr& bundle) {
  if (!bundle) {
    raise(ErrorCode::BadParameter, "section without a bundle");
  }
}

}  // namespace

Section make_section(BundlePtr bundle, std::vector<CMatrix> values,
                     double tol) {
  require_bundle(bundle);
  const std::size_t order = static_cast<std::size_t>(bundle->group.order());
  if (values.size() != order) {
    raise(ErrorCode::DimensionMismatch,
          "section needs " + std::to_string(order) + " values, got " +
              std::to_string(values.size()));
  }
  for (std::size_t t = 0; t < order; ++t) {
    const CMatrix& v = values[t];
    if (v.rows() != bundle->ambient_dim || v.cols() != bundle->ambient_dim) {
      raise(ErrorCode::DimensionMismatch,
            "section value " + std::to_string(t) + " is not " +
                std::to_string(bundle->ambient_dim) + "x" +
                std::to_string(bundle->ambient_dim));
    }
    double defect = bundle->fibers[t].containment_defect(v);
    if (defect > tol * (1.0 + v.frobenius_norm())) {
      raise(ErrorCode::FiberViolation,
            "value at group element " + std::to_string(t) +
                " lies outside its fiber (defect " + std::to_string(defect) +
                ")");
    }
  }
  return Section{std::move(bundle), std::move(values)};
}

Section zero_section(BundlePtr bundle) {
  require_bundle(bundle);
  std::vector<CMatrix> values(
      static_cast<std::size_t>(bundle->group.order()),
      CMatrix::zero(bundle->ambient_dim, bundle->ambient_dim));
  return Section{std::move(bundle), std::move(values)};
}

Section delta_section(BundlePtr bundle, int t, const CMatrix& value,
                      double tol) {
  Section s = zero_section(bundle);
  std::vector<CMatrix> values = s.values;
  values[static_cast<std::size_t>(t)] = value;
  return make_section(s.bundle, std::move(values), tol);
}

Section convolve(const Section& x, const Section& y, double tol) {
  require_same_bundle(x, y, "convolve");
  const FiniteGroup& g = x.bundle->group;
  std::vector<CMatrix> values;
  values.reserve(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) {
    CMatrix acc =
        CMatrix::zero(x.bundle->ambient_dim, x.bundle->ambient_dim);
    for (int s = 0; s < g.order(); ++s) {
      acc += x.value(s) * y.value(g.mul(g.inv(s), t));
    }
    values.push_back(std::move(acc));
  }
  return make_section(x.bundle, std::move(values), tol);
}

Section involute(const Section& x, double tol) {
  const FiniteGroup& g = x.bundle->group;
  std::vector<CMatrix> values;
  values.reserve(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) {
    values.push_back(x.value(g.inv(t)).adjoint());
  }
  return make_section(x.bundle, std::move(values), tol);
}

double l1_norm(const Section& x) {
  double total = 0.0;
  for (const CMatrix& v : x.values) total += op_norm(v);
  return total;
}

CMatrix l2_inner(const Section& x, const Section& y) {
  require_same_bundle(x, y, "l2_inner");
  CMatrix acc = CMatrix::zero(x.bundle->ambient_dim, x.bundle->ambient_dim);
  for (std::size_t t = 0; t < x.values.size(); ++t) {
    acc += x.values[t].adjoint() * y.values[t];
  }
  return acc;
}

CMatrix coaction_embedding(const Section& x) {
  const FiniteGroup& g = x.bundle->group;
  const std::size_t n = x.bundle->ambient_dim;
  const std::size_t order = static_cast<std::size_t>(g.order());
  CMatrix out(n * order, n * order);
  // Σ_t ξ(t)⊗λ_t with λ_t[t·s][s] = 1: entry ((i, t·s), (j, s)) += ξ(t)[i][j].
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix& v = x.value(t);
    if (v.max_abs() == 0.0) continue;
    for (int s = 0; s < g.order(); ++s) {
      const std::size_t col_block = static_cast<std::size_t>(s);
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out.at(i * order + row_block, j * order + col_block) += v.at(i, j);
        }
      }
    }
  }
  return out;
}

RegularModel regular_model(BundlePtr bundle) {
  require_bundle(bundle);
  const FiniteGroup& g = bundle->group;
  const std::size_t n = bundle->ambient_dim;
  const std::size_t order = static_cast<std::size_t>(g.order());

  std::vector<std::vector<std::vector<Complex>>> blocks;
  std::size_t total = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<std::vector<Complex>> columns;
    for (const CMatrix& b : bundle->fibers[static_cast<std::size_t>(s)]
                                .basis()) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = b.at(i, j);
        columns.push_back(std::move(col));
      }
    }
    std::vector<std::vector<Complex>> ortho = orthonormal_columns(columns);
    total += ortho.size();
    blocks.push_back(std::move(ortho));
  }

  CMatrix isometry(n * order, total);
  std::vector<std::size_t> dims;
  std::size_t col = 0;
  for (std::size_t s = 0; s < order; ++s) {
    dims.push_back(blocks[s].size());
    for (const std::vector<Complex>& w : blocks[s]) {
      for (std::size_t i = 0; i < n; ++i) {
        isometry.at(i * order + s, col) = w[i];
      }
      ++col;
    }
  }
  return RegularModel{std::move(bundle), std::move(isometry),
                      std::move(dims)};
}

CMatrix regular_representation(const RegularModel& model, const Section& x) {
  if (model.bundle != x.bundle) {
    raise(ErrorCode::BundleMismatch,
          "regular_representation: section from a different bundle");
  }
  CMatrix rho = coaction_embedding(x);
  return model.isometry.adjoint() * (rho * model.isometry);
}

CMatrix regular_representation(const Section& x) {
  return regular_representation(regular_model(x.bundle), x);
}

std::size_t BundleAlgebra::generator_at(int t, std::size_t k) const {
  for (std::size_t i = 0; i < generator_index.size(); ++i) {
    if (generator_index[i].first == t && generator_index[i].second == k) {
      return i;
    }
  }
  raise(ErrorCode::BadParameter,
        "no generator for fiber " + std::to_string(t) + " position " +
            std::to_string(k));
}

BundleAlgebra build_algebra(BundlePtr bundle, double tol) {
  require_bundle(bundle);
  Certificate axioms = check_bundle_axioms(*bundle, tol);
  if (!axioms.pass()) {
    for (const CheckEntry& e : axioms.checks) {
      if (e.gated && !e.pass) {
        raise(ErrorCode::AxiomFailure,
              "bundle fails " + e.anchor + " (residual " +
                  std::to_string(e.residual) + ")");
      }
    }
  }

  const FiniteGroup& g = bundle->group;
  const std::size_t order = static_cast<std::size_t>(g.order());
  BundleAlgebra alg;
  alg.bundle = bundle;
  alg.rep_dim = bundle->ambient_dim * order;

  std::vector<CMatrix> lambdas = left_regular(g);
  for (int t = 0; t < g.order(); ++t) {
    const Subspace& fiber = bundle->fibers[static_cast<std::size_t>(t)];
    for (std::size_t k = 0; k < fiber.dim(); ++k) {
      alg.generator_index.emplace_back(t, k);
      alg.generators.push_back(
          kron(fiber.basis()[k], lambdas[static_cast<std::size_t>(t)]));
    }
  }
  alg.algebra = Subspace::span(alg.rep_dim, alg.generators);
  if (alg.algebra.dim() != bundle->total_dim()) {
    raise(ErrorCode::AxiomFailure,
          "generators span dimension " + std::to_string(alg.algebra.dim()) +
              ", expected " + std::to_string(bundle->total_dim()));
  }

  // Closure under adjoint, and under product on a deterministic sample.
  for (const CMatrix& gen : alg.generators) {
    CMatrix adj = gen.adjoint();
    if (alg.algebra.containment_defect(adj) >
        tol * (1.0 + adj.frobenius_norm())) {
      raise(ErrorCode::AxiomFailure,
            "algebra is not closed under the adjoint");
    }
  }
  const std::size_t ngen = alg.generators.size();
  if (ngen > 0) {
    const std::size_t cap = 64;
    const std::size_t pairs = ngen * ngen;
    const std::size_t stride = std::max<std::size_t>(1, pairs / cap);
    for (std::size_t flat = 0; flat < pairs; flat += stride) {
      CMatrix prod =
          alg.generators[flat % ngen] * alg.generators[flat / ngen];
      if (alg.algebra.containment_defect(prod) >
          tol * (1.0 + prod.frobenius_norm())) {
        raise(ErrorCode::AxiomFailure,
              "algebra is not closed under the product");
      }
    }
  }
  return alg;
}

CMatrix BundleRep::apply(int t, const CMatrix& fiber_value) const {
  const Subspace& fiber = bundle->fibers[static_cast<std::size_t>(t)];
  std::vector<Complex> coords = fiber.coordinates(fiber_value);
  CMatrix out = CMatrix::zero(dim, dim);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == Complex(0.0, 0.0)) continue;
    out += coords[k] * images[static_cast<std::size_t>(t)][k];
  }
  return out;
}

void validate_bundle_rep(const BundleRep& rep, double tol) {
  require_bundle(rep.bundle);
  const FiniteGroup& g = rep.bundle->group;
  if (rep.images.size() != static_cast<std::size_t>(g.order())) {
    raise(ErrorCode::NotARepresentation,
          "expected one image list per group element");
  }
  for (int t = 0; t < g.order(); ++t) {
    const std::size_t expected =
        rep.bundle->fibers[static_cast<std::size_t>(t)].dim();
    if (rep.images[static_cast<std::size_t>(t)].size() != expected) {
      raise(ErrorCode::NotARepresentation,
            "fiber " + std::to_string(t) + " needs " +
                std::to_string(expected) + " basis images");
    }
    for (const CMatrix& im : rep.images[static_cast<std::size_t>(t)]) {
      if (im.rows() != rep.dim || im.cols() != rep.dim) {
        raise(ErrorCode::NotARepresentation, "image dimension mismatch");
      }
    }
  }
  // Multiplicative across fibers and adjoint-compatible, checked on all
  // generator pairs.
  for (int t = 0; t < g.order(); ++t) {
    const Subspace& ft = rep.bundle->fibers[static_cast<std::size_t>(t)];
    for (std::size_t k = 0; k < ft.dim(); ++k) {
      const CMatrix& b = ft.basis()[k];
      const CMatrix& pb = rep.images[static_cast<std::size_t>(t)][k];
      CMatrix adj_image = rep.apply(g.inv(t), b.adjoint());
      double star_defect = (adj_image - pb.adjoint()).frobenius_norm();
      if (star_defect > tol * (1.0 + pb.frobenius_norm())) {
        raise(ErrorCode::NotARepresentation,
              "adjoint of fiber " + std::to_string(t) + " basis " +
                  std::to_string(k) + " is not represented by the adjoint");
      }
      for (int s = 0; s < g.order(); ++s) {
        const Subspace& fs = rep.bundle->fibers[static_cast<std::size_t>(s)];
        for (std::size_t l = 0; l < fs.dim(); ++l) {
          const CMatrix& c = fs.basis()[l];
          const CMatrix& pc = rep.images[static_cast<std::size_t>(s)][l];
          CMatrix lhs = pb * pc;
          CMatrix rhs = rep.apply(g.mul(t, s), b * c);
          double defect = (lhs - rhs).frobenius_norm();
          if (defect > tol * (1.0 + lhs.frobenius_norm() +
                              rhs.frobenius_norm())) {
            raise(ErrorCode::NotARepresentation,
                  "product of fiber " + std::to_string(t) + " basis " +
                      std::to_string(k) + " with fiber " + std::to_string(s) +
                      " basis " + std::to_string(l) +
                      " is not represented multiplicatively");
          }
        }
      }
    }
  }
}

bool bundle_rep_nondegenerate(const BundleRep& rep, double tol) {
  std::vector<std::vector<Complex>> columns;
  for (const auto& fiber_images : rep.images) {
    for (const CMatrix& im : fiber_images) {
      for (std::size_t j = 0; j < rep.dim; ++j) {
        std::vector<Complex> col(rep.dim);
        for (std::size_t i = 0; i < rep.dim; ++i) col[i] = im.at(i, j);
        columns.push_back(std::move(col));
      }
    }
  }
  std::vector<std::vector<Complex>> ortho =
      orthonormal_columns(columns, tol);
  return ortho.size() == rep.dim;
}

CMatrix integrated_form(const BundleRep& rep, const Section& x) {
  if (rep.bundle != x.bundle) {
    raise(ErrorCode::BundleMismatch,
          "integrated_form: section from a different bundle");
  }
  CMatrix acc = CMatrix::zero(rep.dim, rep.dim);
  for (int t = 0; t < x.bundle->group.order(); ++t) {
    acc += rep.apply(t, x.value(t));
  }
  return acc;
}

BundleRep inclusion_rep(BundlePtr bundle) {
  require_bundle(bundle);
  BundleRep rep;
  rep.dim = bundle->ambient_dim;
  rep.images.resize(static_cast<std::size_t>(bundle->group.order()));
  for (int t = 0; t < bundle->group.order(); ++t) {
    rep.images[static_cast<std::size_t>(t)] =
        bundle->fibers[static_cast<std::size_t>(t)].basis();
  }
  rep.bundle = std::move(bundle);
  return rep;
}

BundleRep generator_rep(const BundleAlgebra& alg) {
  BundleRep rep;
  rep.bundle = alg.bundle;
  rep.dim = alg.rep_dim;
  rep.images.resize(
      static_cast<std::size_t>(alg.bundle->group.order()));
  for (std::size_t i = 0; i < alg.generators.size(); ++i) {
    rep.images[static_cast<std::size_t>(alg.generator_index[i].first)]
        .push_back(alg.generators[i]);
  }
  return rep;
}

}  // namespace fellkit
