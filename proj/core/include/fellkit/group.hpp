#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fellkit/complex_matrix.hpp"

namespace fellkit {

// Finite group given by its Cayley table. Element 0 is always the identity
// (constructors re-index when the input uses a different label). Immutable.
class FiniteGroup {
 public:
  // Empty table; every usable instance comes from from_cayley or a
  // builtin constructor. Exists so data holders can default-construct.
  FiniteGroup() = default;

  // Validates the table: identity exists, Latin square, associativity,
  // inverses. Throws NoIdentity / NotLatinSquare / NotAssociative /
  // NoInverse naming the first violation.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                 const std::string& name = "");

  int order() const { return static_cast<int>(order_); }
  int mul(int s, int t) const { return cayley_[static_cast<std::size_t>(s)]
                                            [static_cast<std::size_t>(t)]; }
  int inv(int t) const { return inverse_[static_cast<std::size_t>(t)]; }
  static constexpr int identity() { return 0; }
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  // Modular function; identically 1 on a finite group but carried
  // explicitly so every convolution formula reads like the general case.
  double modular(int t) const { return modular_[static_cast<std::size_t>(t)]; }

  bool same_table(const FiniteGroup& other) const {
    return cayley_ == other.cayley_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::vector<double> modular_;
  std::string name_;
  bool abelian_ = false;
};

// Builtin groups. All constructors validate the table they build.
FiniteGroup cyclic_group(int n);                       // BadParameter if n < 1
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup dihedral_group(int n);                     // order 2n, BadParameter if n < 1
FiniteGroup symmetric3_group();
FiniteGroup quaternion8_group();

// Left regular representation: permutation matrices λ_t on ℂ^G with
// λ_t δ_s = δ_{ts}.
std::vector<CMatrix> left_regular(const FiniteGroup& g);

// Scalar functions on the group, indexed by element.
using ScalarFn = std::vector<Complex>;

ScalarFn delta_fn(const FiniteGroup& g, int t);
// (f ∗ h)(t) = Σ_s f(s) h(s⁻¹ t)
ScalarFn convolve_scalar(const FiniteGroup& g, const ScalarFn& f,
                         const ScalarFn& h);
// f*(t) = conj(f(t⁻¹))  (modular function ≡ 1)
ScalarFn involute_scalar(const FiniteGroup& g, const ScalarFn& f);
// λ(f) = Σ_t f(t) λ_t
CMatrix lambda_scalar(const FiniteGroup& g, const ScalarFn& f);
// Right-translation operator (V_t f)(s) = f(st) appearing in the inner
// product form of the convolution identity.
ScalarFn right_translate(const FiniteGroup& g, const ScalarFn& f, int t);
// ℓ² inner product ⟨f|h⟩ = Σ_t conj(f(t)) h(t), counting measure.
Complex l2_inner_scalar(const ScalarFn& f, const ScalarFn& h);

}  // namespace fellkit
