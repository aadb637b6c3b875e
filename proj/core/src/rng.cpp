#include "fellkit/rng.hpp"

#include <cstddef>

#include "fellkit/error.hpp"

namespace fellkit {

std::vector<Complex> Rng::vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (Complex& z : v) z = box();
  return v;
}

CMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = box();
  }
  return m;
}

CMatrix Rng::hermitian(std::size_t n) {
  const CMatrix m = matrix(n, n);
  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    }
  }
  return h;
}

CMatrix Rng::unitary(std::size_t n) {
  while (true) {
    const CMatrix m = matrix(n, n);
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) cols[j][i] = m.at(i, j);
    }
    const std::vector<std::vector<Complex>> ortho = orthonormal_columns(cols);
    if (ortho.size() != n) continue;  // rank-deficient draw: resample
    CMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) u.at(i, j) = ortho[j][i];
    }
    return u;
  }
}

ScalarFn random_scalar_fn(Rng& rng, const FiniteGroup& g) {
  ScalarFn f(static_cast<std::size_t>(g.order()));
  for (Complex& z : f) z = rng.box();
  return f;
}

CMatrix random_element(Rng& rng, const Subspace& s) {
  CMatrix out(s.ambient_dim(), s.ambient_dim());
  for (const CMatrix& b : s.basis()) out += rng.box() * b;
  return out;
}

Section random_section(Rng& rng, BundlePtr bundle) {
  std::vector<CMatrix> values;
  values.reserve(static_cast<std::size_t>(bundle->group.order()));
  for (int t = 0; t < bundle->group.order(); ++t) {
    values.push_back(random_element(rng, bundle->fiber(t)));
  }
  return make_section(std::move(bundle), std::move(values));
}

OperatorFunction random_operator_function(Rng& rng, const FiniteGroup& g,
                                          std::size_t dim) {
  std::vector<CMatrix> values;
  values.reserve(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) values.push_back(rng.matrix(dim, dim));
  return make_operator_function(g, std::move(values));
}

}  // namespace fellkit
