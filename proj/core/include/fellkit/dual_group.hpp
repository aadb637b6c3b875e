#pragma once

#include <vector>

#include "fellkit/group.hpp"

namespace fellkit {

// Pontrjagin dual of a finite abelian group. The character table comes from
// an invariant-factor decomposition (Smith normal form of the relation
// lattice), so the construction and the character order are deterministic.
struct DualGroup {
  FiniteGroup base;                    // the group G
  FiniteGroup dual;                    // Ĝ with pointwise product as table
  // characters[x][t] = ⟨x, t⟩; row 0 is the trivial character.
  std::vector<std::vector<Complex>> characters;
  // invariant factors d with G ≅ ⊕ ℤ/d (trivial factors omitted)
  std::vector<long long> invariant_factors;

  std::size_t order() const { return base.order(); }
  Complex pairing(int x, int t) const {
    return characters[static_cast<std::size_t>(x)][static_cast<std::size_t>(t)];
  }
};

// Throws NotAbelian for non-abelian input.
DualGroup dual_group(const FiniteGroup& g);

}  // namespace fellkit
