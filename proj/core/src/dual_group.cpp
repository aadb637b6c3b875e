#include "fellkit/dual_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

using Row = std::vector<long long>;

// Diagonalize the relation matrix M (m rows of the free group ℤ^m are the
// coordinates; columns are relation vectors) by unimodular row/column
// operations: U·M_original·V = diag. Only U is tracked — row k of U gives
// the coordinate functional of the k-th cyclic factor.
struct Diagonalization {
  std::vector<long long> diag;          // one entry per row of M
  std::vector<Row> u;                   // m×m unimodular
};

Diagonalization smith_diagonalize(std::vector<Row> m_cols_by_row,
                                  std::size_t rows) {
  // m_cols_by_row: rows × cols
  const std::size_t cols = m_cols_by_row.empty() ? 0 : m_cols_by_row[0].size();
  std::vector<Row> u(rows, Row(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(m_cols_by_row[a], m_cols_by_row[b]);
    std::swap(u[a], u[b]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long long q) {
    // row_dst -= q·row_src
    for (std::size_t j = 0; j < cols; ++j)
      m_cols_by_row[dst][j] -= q * m_cols_by_row[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) m_cols_by_row[r][j] = -m_cols_by_row[r][j];
    for (std::size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i)
      std::swap(m_cols_by_row[i][a], m_cols_by_row[i][b]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t i = 0; i < rows; ++i)
      m_cols_by_row[i][dst] -= q * m_cols_by_row[i][src];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Deterministic pivot: smallest nonzero |entry| in the trailing block,
      // ties broken by row then column index.
      std::size_t pi = rows, pj = cols;
      long long best = 0;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          const long long v = std::llabs(m_cols_by_row[i][j]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        // trailing block is zero; remaining diagonal entries are 0
        goto done;
      }
      if (pi != k) swap_rows(k, pi);
      if (pj != k) swap_cols(k, pj);
      if (m_cols_by_row[k][k] < 0) negate_row(k);

      bool reduced = true;
      const long long pivot = m_cols_by_row[k][k];
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m_cols_by_row[i][k] != 0) {
          const long long q = m_cols_by_row[i][k] / pivot;
          add_row(i, k, q);
          if (m_cols_by_row[i][k] != 0) reduced = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m_cols_by_row[k][j] != 0) {
          const long long q = m_cols_by_row[k][j] / pivot;
          add_col(j, k, q);
          if (m_cols_by_row[k][j] != 0) reduced = false;
        }
      }
      if (reduced) break;  // row k and column k clear beyond the pivot
    }
  }
done:
  Diagonalization out;
  out.diag.assign(rows, 0);
  for (std::size_t k = 0; k < steps; ++k) out.diag[k] = m_cols_by_row[k][k];
  out.u = std::move(u);
  return out;
}

}  // namespace

DualGroup dual_group(const FiniteGroup& g) {
  if (!g.is_abelian()) {
    raise(ErrorCode::NotAbelian,
          "dual group requested for non-abelian group " + g.name());
  }
  const std::size_t n = g.order();

  // Relation lattice of the presentation with one generator per element:
  // ε_0 (identity is trivial) and ε_i + ε_j − ε_{i·j} for all pairs.
  // Collect as columns; we keep rows = coordinates.
  std::vector<Row> rel;  // each is a length-n column
  {
    Row e0(n, 0);
    e0[0] = 1;
    rel.push_back(e0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Row r(n, 0);
        r[i] += 1;
        r[j] += 1;
        r[static_cast<std::size_t>(g.mul(static_cast<int>(i),
                                         static_cast<int>(j)))] -= 1;
        rel.push_back(std::move(r));
      }
  }
  // Shape into rows × cols.
  const std::size_t cols = rel.size();
  std::vector<Row> m(n, Row(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = rel[c][r];

  Diagonalization d = smith_diagonalize(std::move(m), n);

  // Quotient coordinates: element i ↦ (U·ε_i mod d_k) over factors with
  // d_k > 1. A zero diagonal entry would mean an infinite factor, which is
  // impossible for a validated finite group.
  std::vector<std::size_t> factor_rows;
  std::vector<long long> factors;
  long long total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d.diag[k] == 0) {
      raise(ErrorCode::BadParameter,
            "internal: relation lattice not full rank for " + g.name());
    }
    if (d.diag[k] > 1) {
      factor_rows.push_back(k);
      factors.push_back(d.diag[k]);
      total *= d.diag[k];
    }
  }
  if (total != static_cast<long long>(n)) {
    raise(ErrorCode::BadParameter,
          "internal: invariant factors of " + g.name() + " multiply to " +
              std::to_string(total) + ", expected " + std::to_string(n));
  }

  const std::size_t nf = factors.size();
  // coordinates[t][k] ∈ ℤ/d_k
  std::vector<std::vector<long long>> coords(n, std::vector<long long>(nf, 0));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < nf; ++k) {
      const long long dk = factors[k];
      long long v = d.u[factor_rows[k]][t] % dk;
      if (v < 0) v += dk;
      coords[t][k] = v;
    }

  // Characters indexed by mixed-radix tuples over the factors, last factor
  // fastest; index 0 is the trivial character.
  std::vector<long long> strides(nf, 1);
  for (std::size_t k = nf; k-- > 1;) strides[k - 1] = strides[k] * factors[k];

  auto tuple_of = [&](std::size_t x) {
    std::vector<long long> b(nf, 0);
    long long rem = static_cast<long long>(x);
    for (std::size_t k = 0; k < nf; ++k) {
      b[k] = rem / strides[k];
      rem %= strides[k];
    }
    return b;
  };
  auto index_of = [&](const std::vector<long long>& b) {
    long long x = 0;
    for (std::size_t k = 0; k < nf; ++k) x += b[k] * strides[k];
    return static_cast<std::size_t>(x);
  };

  DualGroup out;
  out.base = g;
  out.invariant_factors = factors;
  out.characters.assign(n, std::vector<Complex>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const auto b = tuple_of(x);
    for (std::size_t t = 0; t < n; ++t) {
      double phase = 0.0;
      for (std::size_t k = 0; k < nf; ++k) {
        phase += static_cast<double>(b[k] * coords[t][k]) /
                 static_cast<double>(factors[k]);
      }
      out.characters[x][t] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
  }

  // Group law of the dual: pointwise product of characters = tuple addition.
  std::vector<std::vector<int>> dual_table(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto bx = tuple_of(x);
      const auto by = tuple_of(y);
      for (std::size_t k = 0; k < nf; ++k) bx[k] = (bx[k] + by[k]) % factors[k];
      dual_table[x][y] = static_cast<int>(index_of(bx));
    }
  out.dual = FiniteGroup::from_cayley(dual_table, "dual(" + g.name() + ")");
  return out;
}

}  // namespace fellkit
