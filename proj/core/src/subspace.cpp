#include "fellkit/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fellkit/error.hpp"

namespace fellkit {

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<CMatrix>& spanning,
                        double drop_tol) {
  Subspace s(ambient_dim);
  for (const CMatrix& v : spanning) {
    if (v.rows() != ambient_dim || v.cols() != ambient_dim) {
      raise(ErrorCode::DimensionMismatch,
            "span: element is " + std::to_string(v.rows()) + "x" +
                std::to_string(v.cols()) + ", ambient is " +
                std::to_string(ambient_dim));
    }
    const double original = v.frobenius_norm();
    if (original == 0.0) continue;
    CMatrix w = v;
    // Two projection passes: plain MGS loses orthogonality when the input
    // is nearly dependent; the second pass restores it to round-off.
    for (int pass = 0; pass < 2; ++pass) {
      for (const CMatrix& b : s.basis_) {
        w -= hs_inner(b, w) * b;
      }
    }
    const double residual = w.frobenius_norm();
    if (residual > drop_tol * original) {
      w *= Complex(1.0 / residual, 0.0);
      s.basis_.push_back(w);
    }
  }
  return s;
}

Subspace Subspace::from_orthonormal(std::size_t ambient_dim,
                                    std::vector<CMatrix> basis,
                                    double tol) {
  Subspace s(ambient_dim);
  for (const CMatrix& v : basis) {
    if (v.rows() != ambient_dim || v.cols() != ambient_dim) {
      raise(ErrorCode::DimensionMismatch,
            "from_orthonormal: element is " + std::to_string(v.rows()) + "x" +
                std::to_string(v.cols()) + ", ambient is " +
                std::to_string(ambient_dim));
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex g = hs_inner(basis[i], basis[j]);
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(g - expected));
    }
  }
  if (worst > tol) {
    raise(ErrorCode::BadParameter,
          "from_orthonormal: Gram defect " + std::to_string(worst) +
              " exceeds tolerance " + std::to_string(tol));
  }
  s.basis_ = std::move(basis);
  return s;
}

CMatrix Subspace::project(const CMatrix& m) const {
  CMatrix p(m.rows(), m.cols());
  for (const CMatrix& b : basis_) p += hs_inner(b, m) * b;
  return p;
}

double Subspace::containment_defect(const CMatrix& m) const {
  if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) {
    raise(ErrorCode::DimensionMismatch,
          "containment_defect: matrix " + std::to_string(m.rows()) + "x" +
              std::to_string(m.cols()) + " vs ambient " +
              std::to_string(ambient_dim_));
  }
  return (m - project(m)).frobenius_norm();
}

bool Subspace::contains(const CMatrix& m, double tol) const {
  return containment_defect(m) <= tol * (1.0 + m.frobenius_norm());
}

bool Subspace::equals(const Subspace& other, double tol) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  if (dim() != other.dim()) return false;
  for (const CMatrix& b : basis_)
    if (!other.contains(b, tol)) return false;
  for (const CMatrix& b : other.basis_)
    if (!contains(b, tol)) return false;
  return true;
}

std::vector<Complex> Subspace::coordinates(const CMatrix& m) const {
  std::vector<Complex> c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = hs_inner(basis_[k], m);
  return c;
}

std::vector<std::vector<Complex>> kernel_vectors(const CMatrix& map,
                                                 double rank_tol) {
  const std::size_t c = map.cols();
  const CMatrix gram = map.adjoint() * map;
  HermEig eig = herm_eig(gram, /*want_vectors=*/true, /*hermitian_tol=*/1e-6);
  // Refine each singular value as ‖M·v‖ instead of sqrt of a Gram eigenvalue:
  // the Gram route cannot resolve anything below sqrt(eps)·σ_max, which would
  // hide exactly-singular directions from tolerances tighter than ~1e-8.
  std::vector<std::vector<Complex>> vecs(c, std::vector<Complex>(c));
  std::vector<double> sigma(c, 0.0);
  double sigma_max = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    CMatrix v(c, 1);
    for (std::size_t i = 0; i < c; ++i) {
      vecs[k][i] = eig.eigenvectors.at(i, k);
      v.at(i, 0) = vecs[k][i];
    }
    sigma[k] = (map * v).frobenius_norm();
    sigma_max = std::max(sigma_max, sigma[k]);
  }
  const double threshold = rank_tol * sigma_max;
  std::vector<std::vector<Complex>> kernel;
  for (std::size_t k = 0; k < c; ++k) {
    if (sigma[k] <= threshold) kernel.push_back(std::move(vecs[k]));
  }
  return kernel;
}

std::size_t numeric_rank(const CMatrix& map, double rank_tol) {
  return map.cols() - kernel_vectors(map, rank_tol).size();
}

Subspace solve_nullspace(const CMatrix& map, double rank_tol) {
  const std::size_t c = map.cols();
  const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(
      static_cast<double>(c))));
  if (n * n != c) {
    raise(ErrorCode::DimensionMismatch,
          "solve_nullspace: column count " + std::to_string(c) +
              " is not a square, cannot reshape kernel to matrices");
  }
  std::vector<CMatrix> basis;
  for (const auto& v : kernel_vectors(map, rank_tol)) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < c; ++k) m[k] = v[k];
    basis.push_back(std::move(m));
  }
  // Kernel vectors are already orthonormal; span() only re-validates.
  return Subspace::span(n, basis);
}

Subspace intersect(const Subspace& a, const Subspace& b, double rank_tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    raise(ErrorCode::DimensionMismatch,
          "intersect: ambient dimensions differ");
  }
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(n);
  // Work in the (ka+kb)-dimensional frame [A, −B] instead of ambient
  // coordinates: (α, β) is in the kernel of the frame's Gram matrix
  // exactly when Aα = Bβ, and that common value runs over A ∩ B. With
  // orthonormal bases the Gram matrix is [[I, −A*B], [−B*A, I]].
  const std::size_t k = ka + kb;
  CMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) gram.at(i, i) = Complex(1.0, 0.0);
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t j = 0; j < kb; ++j) {
      const Complex g = hs_inner(a.basis()[i], b.basis()[j]);
      gram.at(i, ka + j) = -g;
      gram.at(ka + j, i) = -std::conj(g);
    }
  }
  std::vector<CMatrix> common;
  for (const auto& v : kernel_vectors(gram, rank_tol)) {
    CMatrix x(n, n);
    for (std::size_t i = 0; i < ka; ++i) {
      if (std::norm(v[i]) == 0.0) continue;
      x += v[i] * a.basis()[i];
    }
    common.push_back(std::move(x));
  }
  return Subspace::span(n, std::move(common));
}

std::vector<std::vector<Complex>> orthonormal_columns(
    const std::vector<std::vector<Complex>>& vectors, double drop_tol) {
  std::vector<std::vector<Complex>> basis;
  for (const auto& v : vectors) {
    double original = 0.0;
    for (const Complex& z : v) original += std::norm(z);
    original = std::sqrt(original);
    if (original == 0.0) continue;
    std::vector<Complex> w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Complex coeff(0.0, 0.0);
        for (std::size_t i = 0; i < w.size(); ++i)
          coeff += std::conj(b[i]) * w[i];
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coeff * b[i];
      }
    }
    double residual = 0.0;
    for (const Complex& z : w) residual += std::norm(z);
    residual = std::sqrt(residual);
    if (residual > drop_tol * original) {
      for (Complex& z : w) z /= residual;
      basis.push_back(std::move(w));
    }
  }
  return basis;
}

void closure_tables(const Subspace& algebra, double tol,
                    std::vector<CMatrix>* mult, CMatrix* star) {
  const auto& basis = algebra.basis();
  const std::size_t k = basis.size();
  mult->assign(k, CMatrix(k, k));
  *star = CMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const CMatrix adj = basis[i].adjoint();
    const double adj_defect = algebra.containment_defect(adj);
    if (adj_defect > tol * (1.0 + adj.frobenius_norm())) {
      raise(ErrorCode::NotInAlgebra,
            "algebra basis is not adjoint-closed: element " +
                std::to_string(i) + " has off-span defect " +
                std::to_string(adj_defect));
    }
    const std::vector<Complex> acoords = algebra.coordinates(adj);
    for (std::size_t l = 0; l < k; ++l) star->at(i, l) = acoords[l];
    for (std::size_t j = 0; j < k; ++j) {
      const CMatrix prod = basis[i] * basis[j];
      const double defect = algebra.containment_defect(prod);
      if (defect > tol * (1.0 + prod.frobenius_norm())) {
        raise(ErrorCode::NotInAlgebra,
              "algebra basis is not product-closed: pair (" +
                  std::to_string(i) + "," + std::to_string(j) +
                  ") has off-span defect " + std::to_string(defect));
      }
      const std::vector<Complex> coords = algebra.coordinates(prod);
      for (std::size_t l = 0; l < k; ++l) (*mult)[i].at(j, l) = coords[l];
    }
  }
}

}  // namespace fellkit
