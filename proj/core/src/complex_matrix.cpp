#include "fellkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorCode::DimensionMismatch,
          std::string(what) + ": " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
              "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) {
  return CMatrix(rows, cols);
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.at(j, i) = std::conj(at(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CMatrix CMatrix::conjugate() const {
  CMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r[k] = std::conj(a_[k]);
  return r;
}

Complex CMatrix::trace() const {
  Complex t(0.0, 0.0);
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double s = 0.0;
  for (const Complex& z : a_) s = std::max(s, std::abs(z));
  return s;
}

double CMatrix::hermitian_defect() const {
  if (!is_square()) return frobenius_norm();
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Complex d = at(i, j) - std::conj(at(j, i));
      s += std::norm(d);
    }
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  for (const Complex& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (Complex& z : a_) z *= scalar;
  return *this;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r += b;
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r -= b;
  return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorCode::DimensionMismatch,
          "matrix product: " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
              "x" + std::to_string(b.cols()));
  }
  CMatrix r(a.rows(), b.cols());
  // i-k-j loop order keeps the inner walk contiguous in both b and r.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

CMatrix operator*(Complex scalar, const CMatrix& a) {
  CMatrix r = a;
  r *= scalar;
  return r;
}

CMatrix operator*(double scalar, const CMatrix& a) {
  return Complex(scalar, 0.0) * a;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t s = 0; s < b.rows(); ++s)
        for (std::size_t u = 0; u < b.cols(); ++u)
          r.at(i * b.rows() + s, j * b.cols() + u) = aij * b.at(s, u);
    }
  return r;
}

namespace {

constexpr int kMaxSweeps = 64;

// One Jacobi rotation zeroing A[p][q]. G differs from the identity only at
// G[p][p]=c·u, G[p][q]=s·u, G[q][p]=−s, G[q][q]=c with |u|=1, c²+s²=1.
// A ← G* A G keeps A Hermitian and strictly reduces off-diagonal mass.
struct Rotation {
  double c;
  double s;
  Complex u;
};

Rotation make_rotation(double app, double aqq, Complex apq) {
  const double g = std::abs(apq);
  Rotation r;
  r.u = apq / g;
  const double tau = (aqq - app) / (2.0 * g);
  double t;
  if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  r.c = 1.0 / std::sqrt(1.0 + t * t);
  r.s = t * r.c;
  return r;
}

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a.at(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

HermEig herm_eig(const CMatrix& m, bool want_vectors, double hermitian_tol) {
  if (!m.is_square()) {
    raise(ErrorCode::DimensionMismatch,
          "herm_eig requires a square matrix, got " + std::to_string(m.rows()) +
              "x" + std::to_string(m.cols()));
  }
  const double norm = m.frobenius_norm();
  const double defect = m.hermitian_defect();
  if (defect > hermitian_tol * (1.0 + norm)) {
    raise(ErrorCode::NotHermitian,
          "hermitian defect " + std::to_string(defect) + " exceeds " +
              std::to_string(hermitian_tol * (1.0 + norm)));
  }

  const std::size_t n = m.rows();
  // Work on the Hermitian average so round-off in the input cannot bias the
  // rotations.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));

  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix();

  HermEig out;
  if (n == 0) {
    out.eigenvectors = v;
    return out;
  }

  const double scale = a.frobenius_norm();
  const double stop = 1e-15 * (1.0 + scale);
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double g = std::abs(apq);
        // Skip entries that can no longer affect the diagonal at working
        // precision; this is what makes late sweeps cheap.
        const double dscale =
            std::abs(a.at(p, p).real()) + std::abs(a.at(q, q).real());
        if (g <= 1e-18 * (1.0 + dscale)) {
          a.at(p, q) = Complex(0.0, 0.0);
          a.at(q, p) = Complex(0.0, 0.0);
          continue;
        }
        const Rotation r =
            make_rotation(a.at(p, p).real(), a.at(q, q).real(), apq);
        const Complex cu = r.c * r.u;
        const Complex su = r.s * r.u;
        // Column update: A ← A·G.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = a.at(i, p);
          const Complex y = a.at(i, q);
          a.at(i, p) = cu * x - r.s * y;
          a.at(i, q) = su * x + r.c * y;
        }
        // Row update: A ← G*·A.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex x = a.at(p, j);
          const Complex y = a.at(q, j);
          a.at(p, j) = std::conj(cu) * x - r.s * y;
          a.at(q, j) = std::conj(su) * x + r.c * y;
        }
        if (want_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const Complex x = v.at(i, p);
            const Complex y = v.at(i, q);
            v.at(i, p) = cu * x - r.s * y;
            v.at(i, q) = su * x + r.c * y;
          }
        }
      }
    }
  }
  if (sweep >= kMaxSweeps && off_diagonal_norm(a) > stop) {
    raise(ErrorCode::NoConvergence,
          "jacobi sweep budget (" + std::to_string(kMaxSweeps) +
              ") exhausted, off-diagonal norm " +
              std::to_string(off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return diag[x] < diag[y];
                   });

  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = diag[order[k]];
  if (want_vectors) {
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        out.eigenvectors.at(i, k) = v.at(i, order[k]);
  }
  out.sweeps = sweep;
  return out;
}

namespace {

// Largest eigenvalue of a real symmetric tridiagonal matrix (diagonal a,
// off-diagonal b) by Sturm-sequence bisection.
double tridiag_lambda_max(const std::vector<double>& a,
                          const std::vector<double>& b) {
  const std::size_t k = a.size();
  double lo = a[0], hi = a[0];
  for (std::size_t i = 0; i < k; ++i) {
    double r = (i > 0 ? std::abs(b[i - 1]) : 0.0) +
               (i + 1 < k ? std::abs(b[i]) : 0.0);
    lo = std::min(lo, a[i] - r);
    hi = std::max(hi, a[i] + r);
  }
  // Count of eigenvalues below x via the shifted LDLᵀ recurrence.
  auto count_below = [&](double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      double off = (i > 0) ? b[i - 1] * b[i - 1] / d : 0.0;
      d = a[i] - x - off;
      if (d == 0.0) d = -1e-300;
      if (d < 0.0) ++count;
    }
    return count;
  };
  for (int iter = 0; iter < 200 && hi - lo > 1e-16 * (1.0 + std::abs(hi));
       ++iter) {
    double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= static_cast<int>(k)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Largest eigenvalue of A*A via Lanczos with full reorthogonalization.
// Matvecs use A and A* directly, so the Gram matrix is never formed.
double lanczos_gram_lambda_max(const CMatrix& m) {
  const std::size_t n = m.cols();
  const CMatrix adj = m.adjoint();
  std::vector<std::vector<Complex>> basis;
  std::vector<double> alpha, beta;

  // Deterministic generic start vector.
  std::mt19937_64 rng(0x5eed0fe11UL);
  auto unit_real = [&rng]() {
    return (static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0)) -
           0.5;
  };
  std::vector<Complex> v(n);
  double vnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Complex(unit_real(), unit_real());
    vnorm += std::norm(v[i]);
  }
  vnorm = std::sqrt(vnorm);
  for (auto& x : v) x /= vnorm;

  const std::size_t max_steps = std::min<std::size_t>(n, 128);
  const std::size_t nrows = m.rows();
  std::vector<Complex> u(nrows), w(n);
  double prev = -1.0;
  int stable = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    basis.push_back(v);
    // w = A*(A v).
    for (std::size_t i = 0; i < nrows; ++i) {
      Complex acc = 0.0;
      const Complex* row = &m[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
      u[i] = acc;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc = 0.0;
      const Complex* row = &adj[i * nrows];
      for (std::size_t j = 0; j < nrows; ++j) acc += row[j] * u[j];
      w[i] = acc;
    }
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a += (std::conj(v[i]) * w[i]).real();
    }
    alpha.push_back(a);
    // Full reorthogonalization, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * w[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= proj * q[i];
      }
    }
    double b = 0.0;
    for (std::size_t i = 0; i < n; ++i) b += std::norm(w[i]);
    b = std::sqrt(b);
    // Converged Ritz value or exhausted invariant subspace.
    if (step >= 11 && step % 4 == 3) {
      double ritz = tridiag_lambda_max(alpha, beta);
      if (std::abs(ritz - prev) <= 1e-14 * (1.0 + std::abs(ritz))) {
        if (++stable >= 2) break;
      } else {
        stable = 0;
      }
      prev = ritz;
    }
    if (b <= 1e-15 * (1.0 + std::abs(a))) break;
    beta.push_back(b);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
  }
  if (beta.size() == alpha.size()) beta.pop_back();
  return tridiag_lambda_max(alpha, beta);
}

}  // namespace

double op_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.max_abs() == 0.0) return 0.0;
  // Large matrices: the full spectrum is not needed, only the top of the
  // Gram spectrum; Lanczos with reorthogonalization reaches machine
  // precision in far fewer operations than a Jacobi sweep schedule.
  if (m.rows() > 48 && m.cols() > 48) {
    return std::sqrt(std::max(0.0, lanczos_gram_lambda_max(m)));
  }
  const CMatrix gram = m.adjoint() * m;
  HermEig eig = herm_eig(gram, /*want_vectors=*/false,
                         /*hermitian_tol=*/1e-6);
  const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  return std::sqrt(std::max(0.0, top));
}

bool is_psd(const CMatrix& m, double tol) {
  HermEig eig = herm_eig(m, /*want_vectors=*/false);
  if (eig.eigenvalues.empty()) return true;
  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  const double scale = std::max(std::abs(lo), std::abs(hi));
  return lo >= -tol * (1.0 + scale);
}

CMatrix psd_sqrt(const CMatrix& m) {
  HermEig eig = herm_eig(m);
  const std::size_t n = m.rows();
  CMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::max(0.0, eig.eigenvalues[k]);
    const double root = std::sqrt(lam);
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.at(i, j) += root * eig.eigenvectors.at(i, k) *
                      std::conj(eig.eigenvectors.at(j, k));
  }
  return r;
}

}  // namespace fellkit
