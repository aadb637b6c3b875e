#include "fellkit/harmonic.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

// Factors the side of a square matrix on ℂⁿ⊗ℂ^G, throwing when it does not
// split as n·|G|.
std::size_t coeff_dim_of(const FiniteGroup& g, const CMatrix& x,
                         const char* what) {
  const std::size_t order = g.order();
  if (!x.is_square() || x.rows() % order != 0 || x.rows() == 0) {
    raise(ErrorCode::DimensionMismatch,
          std::string(what) + ": matrix of size " + std::to_string(x.rows()) +
              "x" + std::to_string(x.cols()) +
              " does not factor over a group of order " +
              std::to_string(order));
  }
  return x.rows() / order;
}

}  // namespace

Complex plancherel(const FiniteGroup& g, const CMatrix& x) {
  if (!x.is_square() || x.rows() != static_cast<std::size_t>(g.order())) {
    raise(ErrorCode::DimensionMismatch,
          "plancherel: expected a " + std::to_string(g.order()) + "x" +
              std::to_string(g.order()) + " matrix");
  }
  return x.at(static_cast<std::size_t>(FiniteGroup::identity()),
              static_cast<std::size_t>(FiniteGroup::identity()));
}

ScalarFn fourier_scalar(const FiniteGroup& g, const CMatrix& x) {
  if (!x.is_square() || x.rows() != static_cast<std::size_t>(g.order())) {
    raise(ErrorCode::DimensionMismatch,
          "fourier_scalar: expected a " + std::to_string(g.order()) + "x" +
              std::to_string(g.order()) + " matrix");
  }
  // φ(λ_{t⁻¹}x) picks out the (t, e) entry: λ_{t⁻¹} moves row t to row e.
  ScalarFn out(g.order());
  for (int t = 0; t < g.order(); ++t) {
    out[static_cast<std::size_t>(t)] =
        x.at(static_cast<std::size_t>(t),
             static_cast<std::size_t>(FiniteGroup::identity()));
  }
  return out;
}

CMatrix slice_plancherel(const FiniteGroup& g, const CMatrix& x) {
  const std::size_t n = coeff_dim_of(g, x, "slice_plancherel");
  const std::size_t order = g.order();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = x.at(i * order, j * order);
    }
  }
  return out;
}

CMatrix fourier_operator(const FiniteGroup& g, const CMatrix& a, int t) {
  const std::size_t n = coeff_dim_of(g, a, "fourier_operator");
  const std::size_t order = g.order();
  if (t < 0 || t >= g.order()) {
    raise(ErrorCode::BadParameter, "fourier_operator: no such group element");
  }
  // (1⊗λ_{t⁻¹})a read at the (e, e) block slot is the (t, e) block of a.
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = a.at(i * order + static_cast<std::size_t>(t), j * order);
    }
  }
  return out;
}

OperatorFunction make_operator_function(const FiniteGroup& g,
                                        std::vector<CMatrix> values) {
  if (values.size() != static_cast<std::size_t>(g.order())) {
    raise(ErrorCode::DimensionMismatch,
          "operator function needs " + std::to_string(g.order()) +
              " values, got " + std::to_string(values.size()));
  }
  const std::size_t n = values.front().rows();
  for (const CMatrix& v : values) {
    if (v.rows() != n || v.cols() != n) {
      raise(ErrorCode::DimensionMismatch,
            "operator function values must share one square dimension");
    }
  }
  return OperatorFunction{g, n, std::move(values)};
}

CMatrix lambda_op(const OperatorFunction& f) {
  const FiniteGroup& g = f.group;
  const std::size_t n = f.coeff_dim;
  const std::size_t order = g.order();
  CMatrix out(n * order, n * order);
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix& v = f.value(t);
    if (v.max_abs() == 0.0) continue;
    for (int s = 0; s < g.order(); ++s) {
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      const std::size_t col_block = static_cast<std::size_t>(s);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out.at(i * order + row_block, j * order + col_block) += v.at(i, j);
        }
      }
    }
  }
  return out;
}

CMatrix block_gram(const OperatorFunction& f) {
  const FiniteGroup& g = f.group;
  const std::size_t n = f.coeff_dim;
  const std::size_t order = g.order();
  CMatrix gram(n * order, n * order);
  for (int s = 0; s < g.order(); ++s) {
    for (int t = 0; t < g.order(); ++t) {
      const CMatrix& v = f.value(g.mul(g.inv(s), t));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          gram.at(static_cast<std::size_t>(s) * n + i,
                  static_cast<std::size_t>(t) * n + j) = v.at(i, j);
        }
      }
    }
  }
  return gram;
}

bool is_positive_definite(const OperatorFunction& f, double tol) {
  CMatrix gram = block_gram(f);
  // A non-Hermitian Gram matrix (i.e. f(t⁻¹) ≠ f(t)*) is never positive.
  if (gram.hermitian_defect() > tol * (1.0 + gram.frobenius_norm())) {
    return false;
  }
  return is_psd(gram, tol);
}

Certificate inversion_check(const FiniteGroup& g, const CMatrix& a,
                            double tol) {
  const std::size_t n = coeff_dim_of(g, a, "inversion_check");
  const std::size_t order = g.order();
  Certificate cert;
  cert.suite = "fourier-inversion";
  cert.tolerance = tol;

  std::vector<CMatrix> coeffs;
  for (int t = 0; t < g.order(); ++t) {
    coeffs.push_back(fourier_operator(g, a, t));
  }
  CMatrix reassembled(n * order, n * order);
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix& v = coeffs[static_cast<std::size_t>(t)];
    for (int s = 0; s < g.order(); ++s) {
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      const std::size_t col_block = static_cast<std::size_t>(s);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          reassembled.at(i * order + row_block, j * order + col_block) +=
              v.at(i, j);
        }
      }
    }
  }
  double scale = a.frobenius_norm();
  double residual = (a - reassembled).frobenius_norm() / (1.0 + scale);

  // Orthogonal projection onto span{M_n⊗λ_t}: per-t block averages. The
  // reassembly above is an oblique projection reading only the s = e column
  // of blocks, so the two differ off the span.
  CMatrix projected(n * order, n * order);
  for (int t = 0; t < g.order(); ++t) {
    CMatrix avg(n, n);
    for (int s = 0; s < g.order(); ++s) {
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      const std::size_t col_block = static_cast<std::size_t>(s);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          avg.at(i, j) += a.at(i * order + row_block, j * order + col_block);
        }
      }
    }
    avg *= Complex(1.0 / static_cast<double>(order), 0.0);
    for (int s = 0; s < g.order(); ++s) {
      const std::size_t row_block = static_cast<std::size_t>(g.mul(t, s));
      const std::size_t col_block = static_cast<std::size_t>(s);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          projected.at(i * order + row_block, j * order + col_block) +=
              avg.at(i, j);
        }
      }
    }
  }
  double span_defect = (a - projected).frobenius_norm() / (1.0 + scale);

  if (span_defect <= tol) {
    cert.add("Thm.FourierInversionTheorem", residual, tol,
             "input lies in span{M_n⊗λ_t}");
  } else {
    cert.add_info("Thm.FourierInversionTheorem", residual,
                  "outside reassembly span; identity not asserted");
  }
  cert.add_info("Thm.FourierInversionTheorem.span", span_defect,
                "projection defect onto span{M_n⊗λ_t}");
  return cert;
}

Certificate sqrt_transport_check(const FiniteGroup& g, const ScalarFn& f,
                                 double tol) {
  Certificate cert;
  cert.suite = "sqrt-transport";
  cert.tolerance = tol;
  CMatrix lf = lambda_scalar(g, f);
  CMatrix root = psd_sqrt(lf);
  ScalarFn xi = fourier_scalar(g, root);

  double root_scale = root.frobenius_norm();
  double root_residual =
      (lambda_scalar(g, xi) - root).frobenius_norm() / (1.0 + root_scale);
  cert.add("Prop349.root", root_residual, tol,
           "the PSD square root stays in the translation span");

  ScalarFn factored = convolve_scalar(g, involute_scalar(g, xi), xi);
  double factor_residual = 0.0;
  double fscale = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) {
    factor_residual += std::norm(f[t] - factored[t]);
    fscale += std::norm(f[t]);
  }
  factor_residual =
      std::sqrt(factor_residual) / (1.0 + std::sqrt(fscale));
  cert.add("Prop349.factorization", factor_residual, tol);

  Complex weight = plancherel(g, lf);
  Complex norm_sq = l2_inner_scalar(xi, xi);
  double weight_residual =
      std::abs(weight - norm_sq) / (1.0 + std::abs(weight));
  cert.add("Prop349.weight", weight_residual, tol,
           "φ(λ(f)) = ⟨ξ|ξ⟩ = f(e)");
  return cert;
}

}  // namespace fellkit
