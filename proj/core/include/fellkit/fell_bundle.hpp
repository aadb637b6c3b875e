#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fellkit/certificate.hpp"
#include "fellkit/group.hpp"
#include "fellkit/subspace.hpp"

namespace fellkit {

// Grading of M_n over a finite group: one subspace per group element. The
// axiom checker certifies whether it is a Fell bundle; constructors that
// build bundles from actions produce gradings that pass by construction.
struct FellBundle {
  FiniteGroup group;
  std::size_t ambient_dim = 0;
  std::vector<Subspace> fibers;  // indexed by group element
  std::string label;

  const Subspace& fiber(int t) const {
    return fibers[static_cast<std::size_t>(t)];
  }
  std::size_t total_dim() const;
};

// Per-axiom residual certificate:
//   Axiom.i.closure       B_t·B_s ⊆ B_{ts}
//   Axiom.i.involution    B_t* = B_{t⁻¹}
//   Axiom.ii.associativity (ab)c = a(bc), (ab)* = b*a*, a** = a (sampled)
//   Axiom.iii.norm        ‖ab‖ ≤ ‖a‖‖b‖ and ‖a*‖ = ‖a‖ (sampled pairs)
//   Axiom.iv.cstar        ‖b*b‖ = ‖b‖² on fiber basis elements
//   Axiom.v.positivity    b*b ⪰ 0 on fiber basis elements
//   UnitFiber.subalgebra  B_e is a *-subalgebra containing every b·b*
// plus an ungated Saturation entry (B_t ⊆ span(B_t·B_t*·B_t)), reported only.
Certificate check_bundle_axioms(const FellBundle& b, double tol = 1e-9);

// Group bundle: fibers span{λ_t} inside M_|G|.
FellBundle group_bundle(const FiniteGroup& g);

// Global action of G on a *-subalgebra B ⊆ M_m: linear maps on M_m
// (given as m²×m² matrices acting on row-major vectorization) restricting
// to *-automorphisms of B with β_e = id and β_s∘β_t = β_{st}.
struct GlobalAction {
  FiniteGroup group;
  Subspace algebra;             // B ⊆ M_m
  std::vector<CMatrix> maps;    // m²×m², indexed by group element

  std::size_t module_dim() const { return algebra.ambient_dim(); }
  CMatrix apply(int t, const CMatrix& x) const;
};

// Validates the action laws on the algebra basis; throws InvalidAction
// naming the first violated law.
void validate_global_action(const GlobalAction& a, double tol = 1e-9);

// Conjugation action β_t = Ad(u_t) for a unitary family u.
GlobalAction action_from_unitaries(const FiniteGroup& g,
                                   const Subspace& algebra,
                                   const std::vector<CMatrix>& unitaries);

struct PartialActionData {
  GlobalAction action;
  Subspace ideal;  // two-sided *-closed ideal I of the algebra
};

// Throws NotAnIdeal when I is not a *-closed two-sided ideal of B.
void validate_ideal(const GlobalAction& a, const Subspace& ideal,
                    double tol = 1e-9);

// I_t = I ∩ β_t(I); the domain ideal of the restricted partial action.
Subspace intersect_ideals(const GlobalAction& a, const Subspace& ideal, int t);

// Concrete semidirect-product bundle in M_{m·|G|}: the covariant pair
// π(b)(v⊗δ_s) = β_{s⁻¹}(b)v ⊗ δ_s, u_t = 1⊗λ_t, fibers π(B)·u_t.
FellBundle semidirect_bundle(const GlobalAction& a);

// Same construction with fibers π(I_t)·u_t for the restriction to an ideal.
FellBundle partial_action_bundle(const PartialActionData& p);

// The covariant embedding π(b) used by the two constructors (block diagonal
// over s with blocks β_{s⁻¹}(b)).
CMatrix covariant_embedding(const GlobalAction& a, const CMatrix& b);
// u_t = 1_m ⊗ λ_t.
CMatrix covariant_unitary(const GlobalAction& a, int t);

}  // namespace fellkit
