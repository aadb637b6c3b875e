#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fellkit {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Small value type; every operation
// returns a fresh matrix, which keeps the numerical code referentially
// transparent (and trivially safe to share across threads).
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return a_.size(); }

  Complex& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  // Row-major flat access (vectorization order used by linear maps on
  // matrix spaces).
  Complex& operator[](std::size_t k) { return a_[k]; }
  const Complex& operator[](std::size_t k) const { return a_[k]; }

  CMatrix adjoint() const;    // conjugate transpose
  CMatrix transpose() const;
  CMatrix conjugate() const;
  Complex trace() const;

  double frobenius_norm() const;
  double max_abs() const;
  // ‖m − m*‖_F, zero for exactly Hermitian input.
  double hermitian_defect() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scalar, const CMatrix& a);
CMatrix operator*(double scalar, const CMatrix& a);

// ⟨a, b⟩ = trace(a* b); the Hilbert–Schmidt inner product, conjugate-linear
// in the first slot.
Complex hs_inner(const CMatrix& a, const CMatrix& b);

// Kronecker product acting on v⊗w with (kron(A,B))(v⊗w) = Av ⊗ Bw; index
// (i,s) of the product space is i*B.rows()+s.
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct HermEig {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // columns; empty when not requested
  int sweeps = 0;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic sweep
// order (row-cyclic), so repeated runs on identical input produce identical
// output. Throws NotHermitian when ‖m−m*‖_F > tol·(1+‖m‖_F), NoConvergence
// after the sweep budget.
HermEig herm_eig(const CMatrix& m, bool want_vectors = true,
                 double hermitian_tol = 1e-9);

// Operator (spectral) norm: sqrt of the largest eigenvalue of m* m.
double op_norm(const CMatrix& m);

// Hermitian positive semidefiniteness: min eigenvalue ≥ −tol·(1+max|eig|).
bool is_psd(const CMatrix& m, double tol = 1e-9);

// Positive square root of a PSD Hermitian matrix (eigenvalues below zero are
// clamped; intended for matrices PSD up to round-off).
CMatrix psd_sqrt(const CMatrix& m);

}  // namespace fellkit
