#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fellkit/dual_action.hpp"
#include "fellkit/fell_bundle.hpp"

namespace fellkit {

// Builtin groups: c2, c3, c4, v4, s3, d4, q8. Throws BadParameter on any
// other name.
FiniteGroup builtin_group(const std::string& name);
const std::vector<std::string>& builtin_group_names();

// Left-translation action of G on the diagonal algebra of the coset space
// G/H, with permutation unitaries. `subgroup` lists the elements of H and
// must be closed; the identity may be omitted.
GlobalAction coset_translation_action(const FiniteGroup& g,
                                      const std::vector<int>& subgroup);

// The global action behind the semidirect/partial fixtures over a builtin
// group: the coset translation action for a fixed subgroup choice
// (trivial H for c2/c3/c4/v4, an order-2 subgroup for s3/d4, the center
// for q8, keeping every ambient at desk scale).
GlobalAction builtin_action(const std::string& group);

// The same action restricted to the ideal spanned by the first ⌈k/2⌉
// diagonal units of the k-point coset algebra.
PartialActionData builtin_partial(const std::string& group);

// Fixture bundle for (group, kind) with kind ∈ {group, semidirect,
// partial}; label is "kind:group".
FellBundle builtin_bundle(const std::string& group, const std::string& kind);

// Parses "c2" / "group:c2" / "semidirect:s3" / "partial:c2" /
// "counterexample:involution" into a bundle.
FellBundle builtin_bundle_by_name(const std::string& spec);

// The shipped corpus as (group, kind) pairs: the seven group bundles,
// semidirect fixtures over c2, v4, s3 and partial fixtures over c2, s3.
const std::vector<std::pair<std::string, std::string>>& default_corpus();

// Ad(diag(1,−1)) as an action of the dual of C2 on full M_2.
DualAction ad_sign_action();

// A grading of M_2 over C2 that is not a Fell bundle: B_e = span{I},
// B_g = span{E01}; the involution axiom fails because E01* = E10 ∉ B_g.
FellBundle involution_counterexample();

// The grading-respecting sub-bundle keeping only the unit fiber (all other
// fibers zero); closed under products and adjoints for any input bundle.
FellBundle unit_fiber_subbundle(const FellBundle& b);

}  // namespace fellkit
