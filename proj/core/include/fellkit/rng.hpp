#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fellkit/complex_matrix.hpp"
#include "fellkit/group.hpp"
#include "fellkit/harmonic.hpp"
#include "fellkit/section.hpp"
#include "fellkit/subspace.hpp"

namespace fellkit {

// Deterministic sampling for suites and spot checks. Every draw funnels
// through one integer-bits → double path, so streams are identical across
// platforms and standard libraries for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }
  // Re and Im uniform in [-1, 1).
  Complex box() { return Complex(symmetric(), symmetric()); }

  std::vector<Complex> vector(std::size_t n);
  CMatrix matrix(std::size_t rows, std::size_t cols);
  CMatrix hermitian(std::size_t n);
  // Haar-ish unitary: Gram–Schmidt of a random square matrix. Deterministic
  // and exactly unitary to round-off; distribution quality is irrelevant for
  // the property checks it feeds.
  CMatrix unitary(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Random scalar function on the group (one box draw per element).
ScalarFn random_scalar_fn(Rng& rng, const FiniteGroup& g);

// Random element of a subspace: random coordinates against the basis.
CMatrix random_element(Rng& rng, const Subspace& s);

// Random section: an independent random fiber element at every t.
Section random_section(Rng& rng, BundlePtr bundle);

// Random operator function t ↦ M_dim.
OperatorFunction random_operator_function(Rng& rng, const FiniteGroup& g,
                                          std::size_t dim);

}  // namespace fellkit
