#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cohom::lattice {

using Int = long long;
using Vec = std::vector<Int>;
using Q = boost::rational<Int>;
using QVec = std::vector<Q>;

inline Int gcd_vec(const Vec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Row echelon form over Q; returns the rank.
inline int rank(const std::vector<QVec>& rows_in) {
  std::vector<QVec> m = rows_in;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c].numerator() != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline QVec to_q(const Vec& v) { return QVec(v.begin(), v.end()); }

inline int rank(const std::vector<Vec>& rows) {
  std::vector<QVec> q;
  for (const auto& v : rows) q.push_back(to_q(v));
  return rank(q);
}

inline std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// dim(span(a) ∩ span(b))
inline int intersection_dim(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return rank(a) + rank(b) - rank(concat(a, b));
}

inline bool contains_span(const std::vector<Vec>& big, const std::vector<Vec>& small) {
  return rank(concat(big, small)) == rank(big);
}

// Basis of {x in Z^n : rows * x = 0}, computed by unimodular column reduction.
// The returned lattice is saturated.
inline std::vector<Vec> integer_kernel(const std::vector<Vec>& rows, int n) {
  std::vector<Vec> a = rows;  // m x n
  std::vector<Vec> u(n, Vec(n, 0));  // columns of u track the transform
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  auto colop = [&](int dst, int src, Int f) {  // col[dst] -= f*col[src]
    for (auto& row : a) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };
  auto colswap = [&](int x, int y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  int piv = 0;
  for (std::size_t i = 0; i < a.size() && piv < n; ++i) {
    while (true) {
      int best = -1;
      for (int j = piv; j < n; ++j)
        if (a[i][j] != 0 && (best < 0 || std::llabs(a[i][j]) < std::llabs(a[i][best]))) best = j;
      if (best < 0) break;
      colswap(piv, best);
      bool done = true;
      for (int j = piv + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        colop(j, piv, a[i][j] / a[i][piv]);
        if (a[i][j] != 0) done = false;
      }
      if (done) { ++piv; break; }
    }
  }
  std::vector<Vec> ker;
  for (int j = piv; j < n; ++j) {
    Vec col(n);
    for (int k = 0; k < n; ++k) col[k] = u[k][j];
    ker.push_back(col);
  }
  return ker;
}

// Basis of span(gens) ∩ Z^n.
inline std::vector<Vec> saturate(const std::vector<Vec>& gens, int n) {
  return integer_kernel(integer_kernel(gens, n), n);
}

inline __int128 det(std::vector<std::vector<__int128>> m) {
  const int k = static_cast<int>(m.size());
  __int128 sign = 1, prev = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int i = c; i < k; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

// Index of the lattice generated by gens inside its saturation.
inline Int index_in_saturation(const std::vector<Vec>& gens, int n) {
  // Row-reduce to an independent generating set with integer row operations.
  std::vector<Vec> m;
  for (const auto& g : gens)
    if (gcd_vec(g) != 0) m.push_back(g);
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < static_cast<int>(m.size()); ++i)
        if (m[i][c] != 0 && (best < 0 || std::llabs(m[i][c]) < std::llabs(m[best][c]))) best = i;
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
        if (m[i][c] == 0) continue;
        Int f = m[i][c] / m[r][c];
        for (int k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) { ++r; break; }
    }
  }
  m.resize(r);
  if (r == 0) return 1;
  // gcd of the r x r minors
  Int g = 0;
  std::vector<int> sel(r);
  std::iota(sel.begin(), sel.end(), 0);
  while (true) {
    std::vector<std::vector<__int128>> sub(r, std::vector<__int128>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub[i][j] = m[i][sel[j]];
    __int128 d = det(sub);
    if (d < 0) d = -d;
    g = std::gcd(g, static_cast<Int>(d));
    int i = r - 1;
    while (i >= 0 && sel[i] == n - r + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
  }
  return g;
}

inline Vec mat_vec(const std::vector<Vec>& rows, const Vec& v) {
  Vec out;
  for (const auto& r : rows) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += r[i] * v[i];
    out.push_back(s);
  }
  return out;
}

// Is exp(2 pi i v) in the torus exp(span(basis))?  i.e. v in span(basis) + Z^n.
inline bool in_torus(const std::vector<Vec>& basis, const QVec& v) {
  const int n = static_cast<int>(v.size());
  for (const auto& d : integer_kernel(basis, n)) {
    Q s = 0;
    for (int i = 0; i < n; ++i) s += Q(d[i]) * v[i];
    if (s.denominator() != 1) return false;
  }
  return true;
}

inline Vec primitive(Vec v) {
  Int g = gcd_vec(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace cohom::lattice
