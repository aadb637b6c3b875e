#include "fellkit/group.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fellkit/error.hpp"

namespace fellkit {

namespace {

// Locate an element acting as two-sided identity, or -1.
int find_identity(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) {
      if (table[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)] != t ||
          table[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] != t) {
        ok = false;
      }
    }
    if (ok) return e;
  }
  return -1;
}

std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& table,
                                      int e) {
  // Swap labels 0 and e so the identity sits at index 0.
  const std::size_t n = table.size();
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::swap(perm[0], perm[static_cast<std::size_t>(e)]);
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = perm[static_cast<std::size_t>(
          table[static_cast<std::size_t>(perm[i])]
               [static_cast<std::size_t>(perm[j])])];
    }
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                     const std::string& name) {
  const std::size_t n = table.size();
  if (n == 0) raise(ErrorCode::BadParameter, "empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      raise(ErrorCode::BadParameter,
            "Cayley table row " + std::to_string(i) + " has " +
                std::to_string(table[i].size()) + " entries, expected " +
                std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= static_cast<int>(n)) {
        raise(ErrorCode::BadParameter,
              "Cayley entry (" + std::to_string(i) + "," + std::to_string(j) +
                  ") = " + std::to_string(table[i][j]) + " out of range");
      }
    }
  }

  const int e = find_identity(table);
  if (e < 0) raise(ErrorCode::NoIdentity, "no two-sided identity element");
  std::vector<std::vector<int>> t = (e == 0) ? table : relabel(table, e);

  // Latin square: each row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const int r = t[i][j];
      if (seen_row[static_cast<std::size_t>(r)]) {
        raise(ErrorCode::NotLatinSquare,
              "row " + std::to_string(i) + " repeats value " +
                  std::to_string(r));
      }
      seen_row[static_cast<std::size_t>(r)] = true;
      const int c = t[j][i];
      if (seen_col[static_cast<std::size_t>(c)]) {
        raise(ErrorCode::NotLatinSquare,
              "column " + std::to_string(i) + " repeats value " +
                  std::to_string(c));
      }
      seen_col[static_cast<std::size_t>(c)] = true;
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int lhs = t[static_cast<std::size_t>(t[a][b])][c];
        const int rhs = t[a][static_cast<std::size_t>(t[b][c])];
        if (lhs != rhs) {
          raise(ErrorCode::NotAssociative,
                "(" + std::to_string(a) + "·" + std::to_string(b) + ")·" +
                    std::to_string(c) + " = " + std::to_string(lhs) + " but " +
                    std::to_string(a) + "·(" + std::to_string(b) + "·" +
                    std::to_string(c) + ") = " + std::to_string(rhs));
        }
      }

  FiniteGroup g;
  g.order_ = n;
  g.cayley_ = std::move(t);
  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.cayley_[a][b] == 0 && g.cayley_[b][a] == 0) {
        g.inverse_[a] = static_cast<int>(b);
        break;
      }
    }
    if (g.inverse_[a] < 0) {
      raise(ErrorCode::NoInverse,
            "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
  g.modular_.assign(n, 1.0);
  g.abelian_ = true;
  for (std::size_t a = 0; a < n && g.abelian_; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.cayley_[a][b] != g.cayley_[b][a]) {
        g.abelian_ = false;
        break;
      }
  g.name_ = name.empty() ? ("order" + std::to_string(n)) : name;
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) raise(ErrorCode::BadParameter, "cyclic group needs n >= 1");
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t[i][j] = static_cast<int>((i + j) % m);
  return FiniteGroup::from_cayley(t, "c" + std::to_string(n));
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int g1 = static_cast<int>(a / nh), h1 = static_cast<int>(a % nh);
      const int g2 = static_cast<int>(b / nh), h2 = static_cast<int>(b % nh);
      t[a][b] = g.mul(g1, g2) * static_cast<int>(nh) + h.mul(h1, h2);
    }
  return FiniteGroup::from_cayley(t, g.name() + "x" + h.name());
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) raise(ErrorCode::BadParameter, "dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m),
                                  std::vector<int>(static_cast<std::size_t>(m)));
  auto rot = [&](int k) { return ((k % n) + n) % n; };
  // indices 0..n-1: rotations r^k; n..2n-1: reflections s·r^k
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int v;
      const bool ra = a < n, rb = b < n;
      const int ka = ra ? a : a - n, kb = rb ? b : b - n;
      if (ra && rb) v = rot(ka + kb);                    // r^a r^b
      else if (ra && !rb) v = n + rot(kb - ka);          // r^a s r^b = s r^{b-a}
      else if (!ra && rb) v = n + rot(ka + kb);          // s r^a r^b
      else v = rot(kb - ka);                             // s r^a s r^b = r^{b-a}
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
    }
  return FiniteGroup::from_cayley(t, "d" + std::to_string(n));
}

FiniteGroup symmetric3_group() {
  // Permutations of {0,1,2}; identity first, then 3-cycles, then swaps.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      // (p·q)(i) = p(q(i)): apply q first.
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t[a][b] = index_of(c);
    }
  return FiniteGroup::from_cayley(t, "s3");
}

FiniteGroup quaternion8_group() {
  // 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  // basis labels: 0=1, 1=i, 2=j, 3=k; table[b1][b2] = (sign, basis)
  struct Q { int sign; int basis; };
  const Q mul[4][4] = {
      {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
      {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
      {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
      {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
  };
  auto decode = [](int x) { return std::pair<int, int>(x % 2 == 0 ? +1 : -1, x / 2); };
  auto encode = [](int sign, int basis) { return 2 * basis + (sign > 0 ? 0 : 1); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto [sa, ba] = decode(a);
      const auto [sb, bb] = decode(b);
      const Q q = mul[ba][bb];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          encode(sa * sb * q.sign, q.basis);
    }
  return FiniteGroup::from_cayley(t, "q8");
}

std::vector<CMatrix> left_regular(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<CMatrix> lambdas;
  lambdas.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    CMatrix m(n, n);
    for (std::size_t s = 0; s < n; ++s) {
      m.at(static_cast<std::size_t>(g.mul(static_cast<int>(t),
                                          static_cast<int>(s))),
           s) = Complex(1.0, 0.0);
    }
    lambdas.push_back(std::move(m));
  }
  return lambdas;
}

ScalarFn delta_fn(const FiniteGroup& g, int t) {
  ScalarFn f(g.order(), Complex(0.0, 0.0));
  f[static_cast<std::size_t>(t)] = Complex(1.0, 0.0);
  return f;
}

ScalarFn convolve_scalar(const FiniteGroup& g, const ScalarFn& f,
                         const ScalarFn& h) {
  const std::size_t n = g.order();
  if (f.size() != n || h.size() != n) {
    raise(ErrorCode::DimensionMismatch, "convolve_scalar: function length");
  }
  ScalarFn out(n, Complex(0.0, 0.0));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s) {
      const int rest = g.mul(g.inv(static_cast<int>(s)), static_cast<int>(t));
      out[t] += f[s] * h[static_cast<std::size_t>(rest)];
    }
  return out;
}

ScalarFn involute_scalar(const FiniteGroup& g, const ScalarFn& f) {
  const std::size_t n = g.order();
  if (f.size() != n) {
    raise(ErrorCode::DimensionMismatch, "involute_scalar: function length");
  }
  ScalarFn out(n);
  for (std::size_t t = 0; t < n; ++t)
    out[t] = std::conj(f[static_cast<std::size_t>(g.inv(static_cast<int>(t)))]);
  return out;
}

CMatrix lambda_scalar(const FiniteGroup& g, const ScalarFn& f) {
  const std::size_t n = g.order();
  if (f.size() != n) {
    raise(ErrorCode::DimensionMismatch, "lambda_scalar: function length");
  }
  CMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      m.at(static_cast<std::size_t>(g.mul(static_cast<int>(t),
                                          static_cast<int>(s))),
           s) += f[t];
  return m;
}

ScalarFn right_translate(const FiniteGroup& g, const ScalarFn& f, int t) {
  const std::size_t n = g.order();
  ScalarFn out(n);
  for (std::size_t s = 0; s < n; ++s)
    out[s] = f[static_cast<std::size_t>(g.mul(static_cast<int>(s), t))];
  return out;
}

Complex l2_inner_scalar(const ScalarFn& f, const ScalarFn& h) {
  if (f.size() != h.size()) {
    raise(ErrorCode::DimensionMismatch, "l2_inner_scalar: function length");
  }
  Complex s(0.0, 0.0);
  for (std::size_t t = 0; t < f.size(); ++t) s += std::conj(f[t]) * h[t];
  return s;
}

}  // namespace fellkit
