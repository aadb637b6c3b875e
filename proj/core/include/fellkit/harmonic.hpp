#pragma once

#include <vector>

#include "fellkit/certificate.hpp"
#include "fellkit/group.hpp"

namespace fellkit {

// The Plancherel weight φ on the algebra generated by the translation
// matrices: the (δ_e, δ_e) matrix coefficient. On span{λ_t} it agrees with
// trace/|G| (kept as a cross-check, not as the definition).
Complex plancherel(const FiniteGroup& g, const CMatrix& x);

// Scalar Fourier transform x̂(t) = φ(λ_{t⁻¹}·x); inverts f ↦ λ(f).
ScalarFn fourier_scalar(const FiniteGroup& g, const CMatrix& x);

// (id⊗φ)(X) for X on ℂⁿ⊗ℂ^G; positive and unital on the λ-span.
CMatrix slice_plancherel(const FiniteGroup& g, const CMatrix& x);

// Operator Fourier coefficient â(t) = (id⊗φ)((1⊗λ_{t⁻¹})·a).
CMatrix fourier_operator(const FiniteGroup& g, const CMatrix& a, int t);

// Operator-valued function on the group with values in M_n.
struct OperatorFunction {
  FiniteGroup group;
  std::size_t coeff_dim = 0;
  std::vector<CMatrix> values;  // indexed by group element

  const CMatrix& value(int t) const {
    return values[static_cast<std::size_t>(t)];
  }
};

OperatorFunction make_operator_function(const FiniteGroup& g,
                                        std::vector<CMatrix> values);

// λ(f) = Σ_t f(t)⊗λ_t on ℂⁿ⊗ℂ^G.
CMatrix lambda_op(const OperatorFunction& f);

// Full block Gram matrix (f(s⁻¹t))_{s,t}, the positivity witness.
CMatrix block_gram(const OperatorFunction& f);

// Positive-definiteness of f: the block Gram matrix over all of G is PSD.
// Equivalent to λ(f) ⪰ 0 (the two matrices are permutation-similar).
bool is_positive_definite(const OperatorFunction& f, double tol = 1e-9);

// Fourier inversion on ℂⁿ⊗ℂ^G: a = Σ_t â(t)⊗λ_t. The identity is gated
// only when a lies in span{M_n⊗λ_t}; otherwise the certificate reports the
// reassembly residual and the projection defect as information.
Certificate inversion_check(const FiniteGroup& g, const CMatrix& a,
                            double tol = 1e-9);

// Square-root transport for a scalar f with λ(f) ⪰ 0: ξ := the Fourier
// transform of the PSD square root R of λ(f) satisfies λ(ξ) = R and
// f = ξ*∗ξ, and φ(λ(f)) = f(e) = ⟨ξ|ξ⟩.
Certificate sqrt_transport_check(const FiniteGroup& g, const ScalarFn& f,
                                 double tol = 1e-9);

}  // namespace fellkit
