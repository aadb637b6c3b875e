#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/fell_bundle.hpp"

namespace fellkit {

// Section of a bundle: one fiber value per group element. Sections keep a
// shared handle to their bundle; operations on two sections require the
// same bundle instance.
struct Section {
  std::shared_ptr<const FellBundle> bundle;
  std::vector<CMatrix> values;  // values[t] ∈ B_t

  const CMatrix& value(int t) const {
    return values[static_cast<std::size_t>(t)];
  }
};

using BundlePtr = std::shared_ptr<const FellBundle>;

// Validates fiber membership (throws FiberViolation naming the offending
// group element) and dimensions.
Section make_section(BundlePtr bundle, std::vector<CMatrix> values,
                     double tol = 1e-9);
Section zero_section(BundlePtr bundle);
// ξ(t) = value, zero elsewhere.
Section delta_section(BundlePtr bundle, int t, const CMatrix& value,
                      double tol = 1e-9);

// (ξ∗η)(t) = Σ_s ξ(s)·η(s⁻¹t).
Section convolve(const Section& x, const Section& y, double tol = 1e-9);
// ξ*(t) = ξ(t⁻¹)*  (unimodular group, so no modular correction).
Section involute(const Section& x, double tol = 1e-9);
// Σ_t ‖ξ(t)‖ in the operator norm.
double l1_norm(const Section& x);
// ⟨ξ|η⟩ = Σ_t ξ(t)*·η(t); a matrix in the unit fiber.
CMatrix l2_inner(const Section& x, const Section& y);

// ρ(ξ) = Σ_t ξ(t)⊗λ_t on ℂⁿ⊗ℂ^G; a faithful *-homomorphism of the
// section algebra into M_{n·|G|}.
CMatrix coaction_embedding(const Section& x);

// The subspace H_B = ⊕_s span(B_s·ℂⁿ)⊗δ_s of ℂⁿ⊗ℂ^G carrying the left
// regular representation λ_B(ξ)w = ξ∗w. The isometry's columns are an
// orthonormal basis of H_B.
struct RegularModel {
  BundlePtr bundle;
  CMatrix isometry;                  // (n·|G|) × dim H_B
  std::vector<std::size_t> block_dims;  // dim span(B_s·ℂⁿ) per s
};

RegularModel regular_model(BundlePtr bundle);
// λ_B(ξ) compressed to H_B (H_B is invariant for valid bundles, so this is
// the matrix of the regular representation).
CMatrix regular_representation(const RegularModel& model, const Section& x);
CMatrix regular_representation(const Section& x);

// The section algebra realized concretely: the span of the generators
// b⊗λ_t inside M_{n·|G|}, together with the generator bookkeeping.
struct BundleAlgebra {
  BundlePtr bundle;
  std::size_t rep_dim = 0;  // n·|G|
  Subspace algebra;         // span of the generators
  // generator i is fiber basis element generator_index[i].second of fiber
  // generator_index[i].first, embedded as b⊗λ_t.
  std::vector<std::pair<int, std::size_t>> generator_index;
  std::vector<CMatrix> generators;

  // Index into generators for fiber t, basis position k.
  std::size_t generator_at(int t, std::size_t k) const;
};

// Requires the bundle to pass its axioms (throws AxiomFailure naming the
// violated identity otherwise); certifies that the generators span a space
// of the full expected dimension, closed under product and adjoint.
BundleAlgebra build_algebra(BundlePtr bundle, double tol = 1e-9);

// Representation of the bundle on ℂ^d: linear on each fiber (given by the
// images of the fiber's orthonormal basis), multiplicative across fibers,
// adjoint-compatible.
struct BundleRep {
  BundlePtr bundle;
  std::size_t dim = 0;
  std::vector<std::vector<CMatrix>> images;  // images[t][k] ∈ M_dim

  CMatrix apply(int t, const CMatrix& fiber_value) const;
};

// Throws NotARepresentation naming the first violated pair of generators.
void validate_bundle_rep(const BundleRep& rep, double tol = 1e-9);
// Whether span{π(b)v} is all of ℂ^d.
bool bundle_rep_nondegenerate(const BundleRep& rep, double tol = 1e-9);

// π(ξ) = Σ_t π(ξ(t)).
CMatrix integrated_form(const BundleRep& rep, const Section& x);

// The identity representation b ↦ b on ℂⁿ.
BundleRep inclusion_rep(BundlePtr bundle);
// The representation b∈B_t ↦ b⊗λ_t; its integrated form is ρ.
BundleRep generator_rep(const BundleAlgebra& alg);

}  // namespace fellkit
