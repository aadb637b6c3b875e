#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fellkit/certificate.hpp"
#include "fellkit/complex_matrix.hpp"
#include "fellkit/group.hpp"
#include "fellkit/section.hpp"
#include "fellkit/subspace.hpp"

namespace fellkit {

// A coaction of a finite group G on a concrete *-subalgebra A ⊆ M_d:
// a linear map δ : A → M_d ⊗ M_|G| whose image is expected to lie in
// A ⊗ span{λ_t}. It is stored in coefficient form: with a_1,…,a_k the
// orthonormal basis of A,
//
//   δ(a_j) = Σ_{p,t} kappa[j](p,t) · a_p ⊗ λ_t  +  R_j,
//
// where R_j is the component orthogonal to A ⊗ span{λ_t} (zero for a valid
// coaction). kappa[j] is a k×|G| matrix. Products and adjoints of basis
// elements are cached as structure constants, so every identity involving
// δ can be evaluated in coefficient space without assembling d·|G|-sized
// matrices; only the Gram matrix of the off-span parts R_j is kept, which
// suffices to recover the exact norm of any linear combination of them.
struct Coaction {
  FiniteGroup group;
  Subspace algebra;            // orthonormal basis a_p, ambient M_d
  std::size_t coeff_dim = 0;   // d
  std::vector<CMatrix> kappa;  // kappa[j]: k×|G|, entry (p,t)
  // mult[i].at(j,l): coefficient of a_l in a_i·a_j.
  std::vector<CMatrix> mult;
  // star.at(j,l): coefficient of a_l in a_j*.
  CMatrix star;
  // offspan_gram.at(j,l) = ⟨R_j, R_l⟩ (Hilbert–Schmidt).
  CMatrix offspan_gram;
  // Worst relative off-span defect over basis images.
  double span_defect = 0.0;
  std::string label;

  std::size_t dim() const { return algebra.dim(); }
};

// Build a coaction from materialized images X_j = δ(a_j) ∈ M_{d·|G|}, one
// per basis element of `algebra`. The algebra basis must be closed under
// products and adjoints within tol (throws NotInAlgebra otherwise); the
// images may stick out of A ⊗ span{λ_t} — the defect is recorded, not
// rejected, so invalid coactions can be diagnosed by check_coaction.
Coaction make_coaction(const FiniteGroup& g, const Subspace& algebra,
                       const std::vector<CMatrix>& images,
                       std::string label = "coaction", double tol = 1e-9);

// δ(a) = a ⊗ λ_e on a given *-subalgebra.
Coaction trivial_coaction(const FiniteGroup& g, const Subspace& algebra,
                          double tol = 1e-9);
// A = span{λ_t} ⊆ M_|G|, δ(λ_t) = λ_t ⊗ λ_t.
Coaction comultiplication_coaction(const FiniteGroup& g);
// A = span{λ_t}, δ(λ_t) = λ_t ⊗ λ_{t⁻¹}. A homomorphism only when the
// group is abelian; on nonabelian groups check_coaction rejects it.
Coaction flip_coaction(const FiniteGroup& g);
// A = span{λ_t}, δ(a) = a ⊗ p with p the averaging projection
// (1/|G|)Σ_t λ_t. A *-homomorphism into A ⊗ span{λ_t} that fails both
// coassociativity and the density condition for |G| > 1.
Coaction projection_coaction(const FiniteGroup& g);
// The dual coaction on a concrete section algebra: δ(b⊗λ_t) = (b⊗λ_t)⊗λ_t.
Coaction dual_coaction(const BundleAlgebra& alg);

// Certificate over the defining conditions, all in coefficient space:
//   Coaction.span      image lies in A ⊗ span{λ_t}
//   Coaction.hom       δ(ab) = δ(a)δ(b) over all basis pairs
//   Coaction.star      δ(a*) = δ(a)*
//   Coaction.coassoc   (δ⊗id)∘δ = (id⊗Δ̂)∘δ with Δ̂(λ_t) = λ_t⊗λ_t
//   Coaction.podles    span{δ(A)(1⊗λ_t)} = A ⊗ span{λ_t}
// When the span condition fails, the remaining residuals are computed on
// the projected image and say so in their notes.
Certificate check_coaction(const Coaction& c, double tol = 1e-9);

// Whether δ is injective (full column rank of the stacked coefficient
// matrices).
bool coaction_injective(const Coaction& c, double rank_tol = 1e-9);

// Materialized δ(a) ∈ M_{d·|G|} — more precisely, the projection of δ(a)
// onto A ⊗ span{λ_t}, which is δ(a) itself for every valid coaction.
CMatrix coaction_apply(const Coaction& c, const CMatrix& a);

// Fourier coefficient E_t(a) = (id⊗φ)(δ(a)(1⊗λ_t*)) ∈ A, with φ the
// normalized trace on M_|G|. Throws NotInAlgebra when a ∉ A.
CMatrix fourier_coeff(const Coaction& c, const CMatrix& a, int t);

// Av(a) = (id⊗φ)(δ(a)) = E_e(a); lands in the fixed-point algebra.
CMatrix average(const Coaction& c, const CMatrix& a);

// The spectral subspace M_t(A) = {b ∈ A : δ(b) = b ⊗ λ_t}.
Subspace spectral_subspace(const Coaction& c, int t);

// Relative distance from m to M_t(A). Throws NotInAlgebra when m ∉ A.
double spectral_membership_defect(const Coaction& c, const CMatrix& m, int t,
                                  double tol = 1e-9);

// Fourier–Stieltjes smoothing: u∗a := (id⊗ω_u)(δ(a)) with
// ω_u(x) = Σ_t u(t)·x̂(t) on span{λ_t}. Throws NotInAlgebra when a ∉ A.
CMatrix fs_action(const ScalarFn& u, const Coaction& c, const CMatrix& a);

// Inversion certificate for a single element:
//   Thm.FourierInversion.i    δ(a) = Σ_t E_t(a) ⊗ λ_t
//   Thm.FourierInversion.ii   a = Σ_t E_t(a); asserted only when δ is
//                             injective (rank check) — otherwise reported
//                             as information citing Rem.InjectivityNecessary
//   Thm.FourierInversion.iii  u∗a = Σ_t u(t)·E_t(a) over sampled u
Certificate coaction_inversion(const Coaction& c, const CMatrix& a,
                               double tol = 1e-9, std::size_t samples = 5,
                               std::uint64_t seed = 0);

// The four interaction identities between Fourier coefficients and
// spectral elements, for a, b ∈ A and m ∈ M_s(A) (membership certified
// first; throws NotSpectral if it fails):
//   Prop020.i    E_t(a)* = E_{t⁻¹}(a*)
//   Prop020.ii   m·E_t(a) = E_{st}(m·a)
//   Prop020.iii  E_t(a)·m = E_{ts}(a·m)
//   Prop020.iv   E_t(a)·E_s(b) = E_{ts}(E_t(a)·b) = E_{ts}(a·E_s(b))
Certificate prop020_check(const Coaction& c, const CMatrix& a,
                          const CMatrix& b, const CMatrix& m, int s, int t,
                          double tol = 1e-9);

// Equivariant *-homomorphism compatibility. pi_images[i] is the image in
// M_{d_B} of the i-th basis element of c_a's algebra. Preconditions — π is
// a *-homomorphism into B and (π⊗id)∘δ_A = δ_B∘π — are checked and throw
// NotHomomorphism / NotEquivariant. The certificate then records
//   Prop.CompatibilitySpectralElements      E_t(π(a)) = π(E_t(a)) for all t
//   Prop.CompatibilitySpectralElements.Av   Av(π(a)) = π(Av(a))
Certificate pushforward_check(const Coaction& c_a, const Coaction& c_b,
                              const std::vector<CMatrix>& pi_images,
                              const CMatrix& a, double tol = 1e-9);

// The multiplicative unitary W = I_n ⊗ W_G on ℂⁿ⊗ℂ^G⊗ℂ^G, where
// W_G(δ_s⊗δ_t) = δ_s⊗δ_{st}. W is a permutation and is applied
// symbolically; the certificate verifies
//   W.unitary       the underlying index map is a bijection
//   W.conjugation   δ(x) = W(x⊗1)W* on every algebra generator, compared
//                   through the λ-block coefficients of both sides
Certificate w_unitary_check(const BundleAlgebra& alg, double tol = 1e-9);

}  // namespace fellkit
