#pragma once

// Brute-force references used by the unit and acceptance tests. None of these call into the library.

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using V = std::vector<long long>;

inline long long dot(const V& a, const V& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Root systems in coordinates: A_n in R^{n+1}, B_n/C_n/D_n in R^n, G2 in the sum-zero plane of R^3.
inline std::vector<V> roots(char type, int n) {
  std::vector<V> r;
  auto e = [](int dim, int i) {
    V v(dim, 0);
    v[i] = 1;
    return v;
  };
  if (type == 'A' || type == 'G') {
    const int d = type == 'G' ? 3 : n + 1;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) {
          V v = e(d, i);
          v[j] = -1;
          r.push_back(v);
        }
    if (type == 'G')
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          V v(3, -s);
          v[i] = 2 * s;
          r.push_back(v);
        }
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          V v(n, 0);
          v[i] = si;
          v[j] = sj;
          r.push_back(v);
        }
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      if (type == 'B' || type == 'C') {
        V v(n, 0);
        v[i] = type == 'B' ? s : 2 * s;
        r.push_back(v);
      }
    }
  return r;
}

// |W| as the orbit size of a regular vector under all root reflections.
inline long long weyl_brute(char type, int n) {
  auto rs = roots(type, n);
  V start;
  if (type == 'G') start = {-4, -1, 5};
  else if (type == 'A')
    for (int i = 0; i <= n; ++i) start.push_back(i);
  else
    for (int i = 1; i <= n; ++i) start.push_back(i);
  for (const auto& a : rs)
    if (dot(start, a) == 0) throw std::logic_error("start vector is not regular");
  std::set<V> seen{start};
  std::vector<V> todo{start};
  while (!todo.empty()) {
    V v = todo.back();
    todo.pop_back();
    for (const auto& a : rs) {
      long long num = 2 * dot(v, a), den = dot(a, a);
      if (num % den != 0) throw std::logic_error("non-integral reflection");
      V w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= num / den * a[i];
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return static_cast<long long>(seen.size());
}

// ---------------------------------------------------------------- torus fixed points

// Coordinate a-planes in C^{a+b}: fixed points of the diagonal torus on the Grassmannian.
inline long long grassmannian_fixed_points(int a, int b) {
  long long c = 0;
  for (unsigned m = 0; m < (1u << (a + b)); ++m)
    if (__builtin_popcount(m) == a) ++c;
  return c;
}

// Torus-invariant orthogonal complex structures on R^{2n} with fixed orientation: one sign per plane, even product.
inline long long complex_structure_fixed_points(int n) {
  long long c = 0;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) % 2 == 0) ++c;
  return c;
}

// Unit vectors of R^{2n+1} fixed by every plane rotation.
inline long long even_sphere_fixed_points(int n) {
  long long c = 0;
  for (int coord = 1; coord <= 2 * n + 1; ++coord)
    if ((coord - 1) / 2 >= n) c += 2;  // not inside one of the n rotation planes
  return c;
}

// Partitions of n by the standard coin-change recurrence.
inline long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

// ---------------------------------------------------------------- deck transformations

// Index of pi_1(S1_{l,k} SU(n-1)) in pi_1(U(n)) = Z, from the kernel of S1 x SU(n-1) -> U(n),
// (z, A) -> diag(z^l, z^-k A). A path from (1, I) to a kernel element (e^{2 pi i j/D}, z^k I)
// closes to a loop whose determinant winds (l - k(n-1)) j / D times.
inline long long deck_index(long long l, long long k, int n) {
  const long long m = n - 1;
  long long D = std::lcm(std::llabs(l) == 0 ? 1 : std::llabs(l), m);
  long long g = 0;
  for (long long j = 1; j <= D; ++j) {
    if ((l * j) % D != 0 || (k * m * j) % D != 0) continue;
    long long w = (l - k * m) * j;
    if (w % D != 0) throw std::logic_error("non-integral winding");
    g = std::gcd(g, std::llabs(w / D));
  }
  return g;
}

// ---------------------------------------------------------------- grammar corpus

class Corpus {
 public:
  explicit Corpus(unsigned seed) : rng_(seed) {}

  std::string next() {
    const int mode = pick(0, 9);
    std::string s;
    if (pick(0, 5) == 0) s += "Z" + std::to_string(pick(2, 4)) + ".";
    if (mode < 3) return s + abstract_product();
    return s + placed_product();
  }

 private:
  std::mt19937 rng_;

  int pick(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  std::string sp() { return pick(0, 4) == 0 ? " " : ""; }

  std::string abstract_simple() {
    switch (pick(0, 8)) {
      case 0: return "SU(" + std::to_string(pick(2, 9)) + ")";
      case 1: return "SO(" + std::to_string(pick(2, 12)) + ")";
      case 2: return "Spin(" + std::to_string(pick(3, 12)) + ")";
      case 3: return "Sp(" + std::to_string(pick(1, 6)) + ")";
      case 4: return "U(" + std::to_string(pick(1, 6)) + ")";
      case 5: {
        std::string c = "SU{" + std::to_string(pick(1, 4));
        for (int i = pick(1, 3); i > 0; --i) c += "," + std::to_string(pick(1, 4));
        return c + "}";
      }
      case 6: return "G2";
      case 7: return "T" + std::to_string(pick(1, 4));
      default: return "S1";
    }
  }

  std::string abstract_product() {
    std::string s = abstract_simple();
    for (int i = pick(0, 3); i > 0; --i) s += sp() + "x" + sp() + abstract_simple();
    return s;
  }

  std::string placed_product() {
    const int fam = pick(0, 3);
    const char* names[] = {"SU", "SO", "Sp", "Spin"};
    int N = fam == 0 ? pick(3, 10) : fam == 2 ? pick(2, 6) : pick(5, 12);
    const bool orth = fam == 1 || fam == 3;
    const int r = fam == 0 ? N : orth ? N / 2 : N;
    int budget = fam == 0 ? N - 1 : r;
    std::vector<std::string> parts;
    int next = 1;
    auto add = [&](const std::string& part, int rk, int len) {
      if (rk > budget) return;
      parts.push_back(part);
      budget -= rk;
      next += len;
    };
    for (int i = pick(1, 3); i > 0 && next <= N; --i) {
      int room = N - next + 1;
      int choice = pick(0, 5);
      if (choice <= 2) {
        // standard block
        if (fam == 2) {
          int k = pick(1, room);
          if (pick(0, 1)) add("Sp(" + std::to_string(k) + ")@[" + std::to_string(next) + ".." + std::to_string(next + k - 1) + "]", k, k);
          else add("U(" + std::to_string(k) + ")@[" + std::to_string(next) + ".." + std::to_string(next + k - 1) + "]", k, k);
        } else if (orth) {
          if (room < 2) break;
          int k = pick(2, room);
          if (pick(0, 1)) {
            int len = 2 * (k / 2);
            add("U(" + std::to_string(k / 2) + ")@[" + std::to_string(next) + ".." + std::to_string(next + len - 1) + "]", k / 2, len);
          } else {
            add("SO(" + std::to_string(k) + ")@[" + std::to_string(next) + ".." + std::to_string(next + k - 1) + "]", k / 2, k);
          }
        } else {
          if (room < 2) break;
          int k = pick(2, room);
          add("SU(" + std::to_string(k) + ")@[" + std::to_string(next) + ".." + std::to_string(next + k - 1) + "]", k - 1, k);
        }
      } else if (choice == 3) {
        V w(r, 0);
        bool nz = false;
        for (auto& x : w) {
          x = pick(-4, 4);
          nz = nz || x != 0;
        }
        if (!nz) w[0] = 1;
        const bool bracket = pick(0, 1);
        std::string t = bracket ? "S1[w(" : "S1w(";
        for (std::size_t j = 0; j < w.size(); ++j) t += (j ? "," : "") + std::to_string(w[j]);
        t += ")";
        if (pick(0, 3) == 0) t += std::string(":") + "RCH"[pick(0, 2)];
        if (bracket) t += "]";
        add(t, 1, 0);
      } else if (choice == 4 && room >= 2) {
        // sigma-placed block on a signed permutation of two coordinates
        std::vector<int> cs;
        for (int c = next; c < next + 2; ++c) cs.push_back(pick(0, 1) ? c : -c);
        std::shuffle(cs.begin(), cs.end(), rng_);
        std::string t = (fam == 2 ? "Sp(2)" : orth ? "SO(2)" : "SU(2)") + std::string("#sigma(") + std::to_string(cs[0]) + "," + std::to_string(cs[1]) + ")";
        add(t, fam == 2 ? 2 : 1, 2);
      } else if (orth && N >= 7 && next == 1 && pick(0, 1)) {
        if (N >= 8 && pick(0, 1)) add("Spin(7)#spin7so8", 3, 8);
        else add("G2#g2so7", 2, 8);
      } else if (fam == 2 && room >= 2) {
        add("Sp(1)#dsp1(" + std::to_string(next) + "," + std::to_string(next + 1) + ")", 1, 2);
      } else if (fam == 0 && room >= 3) {
        add("SO(3)#irr3in3c(" + std::to_string(next) + "," + std::to_string(next + 1) + "," + std::to_string(next + 2) + ")", 1, 3);
      }
    }
    if (parts.empty()) parts.push_back("1");
    std::shuffle(parts.begin(), parts.end(), rng_);
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += sp() + "x" + sp() + parts[i];
    return s + " in " + names[fam] + "(" + std::to_string(N) + ")";
  }
};

}  // namespace oracle
