#pragma once

#include <cstddef>
#include <vector>

#include "fellkit/complex_matrix.hpp"

namespace fellkit {

// Linear subspace of the matrix space M_n, kept as an orthonormal basis
// under the Hilbert–Schmidt inner product. Immutable after construction.
class Subspace {
 public:
  Subspace() : ambient_dim_(0) {}
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  // Orthonormalize a spanning set (modified Gram–Schmidt with one
  // re-orthogonalization pass). Vectors whose residual after projection is
  // ≤ drop_tol relative to their own norm are dropped, so the result is a
  // genuine basis of the span.
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<CMatrix>& spanning,
                       double drop_tol = 1e-10);

  // Adopt an already-orthonormal basis unchanged (verified: the Gram matrix
  // must be the identity within tol, else BadParameter). Keeps bases whose
  // exact form matters — e.g. scaled translation matrices — from being
  // perturbed by re-orthonormalization.
  static Subspace from_orthonormal(std::size_t ambient_dim,
                                   std::vector<CMatrix> basis,
                                   double tol = 1e-9);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CMatrix>& basis() const { return basis_; }

  // Orthogonal projection onto the subspace.
  CMatrix project(const CMatrix& m) const;
  // ‖m − P(m)‖_F
  double containment_defect(const CMatrix& m) const;
  bool contains(const CMatrix& m, double tol = 1e-9) const;
  bool equals(const Subspace& other, double tol = 1e-9) const;
  // Coordinates of m in the orthonormal basis (exact when m lies in the
  // subspace, otherwise coordinates of the projection).
  std::vector<Complex> coordinates(const CMatrix& m) const;

 private:
  std::size_t ambient_dim_;
  std::vector<CMatrix> basis_;
};

// Orthonormal basis of the kernel of an arbitrary rectangular linear map,
// computed from the Hermitian Gram matrix M*M. Singular values at or below
// rank_tol relative to the largest are treated as zero.
std::vector<std::vector<Complex>> kernel_vectors(const CMatrix& map,
                                                 double rank_tol = 1e-9);

// Numerical rank under the same relative threshold.
std::size_t numeric_rank(const CMatrix& map, double rank_tol = 1e-9);

// Kernel of a linear map acting on a vectorized square-matrix space
// (row-major vectorization); the map must have n² columns.
Subspace solve_nullspace(const CMatrix& map, double rank_tol = 1e-9);

// Intersection of two subspaces of the same ambient matrix space. Works in
// the (dim a + dim b)-dimensional coefficient space of the joint frame
// [A, −B] — never in the ambient space — so the cost is governed by the
// subspace dimensions, not by ambient_dim².
Subspace intersect(const Subspace& a, const Subspace& b,
                   double rank_tol = 1e-9);

// Orthonormalize a list of column vectors in ℂ^n (same Gram–Schmidt policy
// as Subspace::span); used for column spans of fibers.
std::vector<std::vector<Complex>> orthonormal_columns(
    const std::vector<std::vector<Complex>>& vectors, double drop_tol = 1e-10);

// Structure constants of a *-closed matrix algebra basis:
//   mult[i].at(j,l) = coefficient of basis[l] in basis[i]·basis[j]
//   star.at(i,l)    = coefficient of basis[l] in basis[i]*
// Throws NotInAlgebra when a product or adjoint of basis elements leaves
// the span by more than tol relative to its size.
void closure_tables(const Subspace& algebra, double tol,
                    std::vector<CMatrix>* mult, CMatrix* star);

}  // namespace fellkit
