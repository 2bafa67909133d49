#pragma once

// Candidate diagrams: K+ from the maximal-rank list, H from sphere patterns acting on K+,
// K- (and alternative K+) by growing H back along the same patterns.

#include "borel_siebenthal.hpp"
#include "catalog.hpp"
#include "diagrams.hpp"
#include "spheres.hpp"
#include "structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace cohom {

struct EnumConfig {
  int max_factors = 4;
  int kmax = 8;
  int rank_bound = 8;
  bool include_projective = false;
  bool dedupe = true;
};

namespace enumeration {

using lattice::Vec;

// A simple factor placed on explicit (signed) coordinates.
struct EF {
  Kind kind = Kind::SU;
  int n = 0;
  std::string tag;
  std::vector<int> coords;
};

// Simple factors plus a torus basis written in the ambient torus frame.
struct Cfg {
  std::vector<EF> f;
  std::vector<Vec> torus;
  int comps = 1;
};

struct Amb {
  Ambient a;
  bool orth = false;
  int r = 0;  // torus frame size
  int N = 0;  // coordinates

  explicit Amb(const Ambient& x) : a(x), orth(orthogonal(x)), r(frame_size(x)), N(coord_count(x)) {}
  int plane_of(int c) const {
    int p = (std::abs(c) - 1) / 2;
    return p < r ? p : -1;
  }
};

// ---------------------------------------------------------------- lattice helpers

inline Vec unit_vec(int r, int i, long long s = 1) {
  Vec v(r, 0);
  v[i] = s;
  return v;
}

// Row Hermite normal form of the lattice spanned by m; zero rows dropped.
inline std::vector<Vec> hnf(std::vector<Vec> m, int n) {
  int row = 0;
  for (int c = 0; c < n && row < static_cast<int>(m.size()); ++c) {
    while (true) {
      int piv = -1;
      for (int i = row; i < static_cast<int>(m.size()); ++i)
        if (m[i][c] != 0 && (piv < 0 || std::llabs(m[i][c]) < std::llabs(m[piv][c]))) piv = i;
      if (piv < 0) break;
      std::swap(m[row], m[piv]);
      bool clean = true;
      for (int i = row + 1; i < static_cast<int>(m.size()); ++i) {
        if (m[i][c] == 0) continue;
        long long q = m[i][c] / m[row][c];
        for (int k = 0; k < n; ++k) m[i][k] -= q * m[row][k];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0)
      for (auto& x : m[row]) x = -x;
    for (int i = 0; i < row; ++i) {
      long long p = m[row][c];
      long long q = m[i][c] >= 0 ? m[i][c] / p : -((-m[i][c] + p - 1) / p);
      if (q)
        for (int k = 0; k < n; ++k) m[i][k] -= q * m[row][k];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

inline std::vector<Vec> kernel(const std::vector<Vec>& rows, int n) {
  if (rows.empty()) {
    std::vector<Vec> id;
    for (int i = 0; i < n; ++i) id.push_back(unit_vec(n, i));
    return id;
  }
  return hnf(lattice::integer_kernel(rows, n), n);
}

// Integer points of span(s).
inline std::vector<Vec> span_lattice(const std::vector<Vec>& s, int n) { return kernel(kernel(s, n), n); }

inline std::string vecs_key(const std::vector<Vec>& vs) {
  std::string k;
  for (const auto& v : vs) {
    k += "[";
    for (auto x : v) k += std::to_string(x) + ",";
    k += "]";
  }
  return k;
}

// ---------------------------------------------------------------- configurations

inline std::vector<std::pair<int, int>> units_of(const Amb& A, const std::vector<int>& cs) {
  std::vector<std::pair<int, int>> u;
  if (!A.orth) {
    for (int c : cs) u.push_back({std::abs(c) - 1, c < 0 ? -1 : 1});
    return u;
  }
  for (std::size_t k = 0; k + 1 < cs.size(); k += 2) {
    int a = std::abs(cs[k]), b = std::abs(cs[k + 1]);
    int p = (std::min(a, b) - 1) / 2;
    if (std::min(a, b) != 2 * p + 1 || std::max(a, b) != 2 * p + 2) return {};
    int s = (cs[k] < 0 ? -1 : 1) * (cs[k + 1] < 0 ? -1 : 1) * (a < b ? 1 : -1);
    u.push_back({p, s});
  }
  return u;
}

inline std::set<int> planes_touched(const Amb& A, const std::vector<int>& cs) {
  std::set<int> p;
  for (int c : cs)
    if (A.plane_of(c) >= 0) p.insert(A.plane_of(c));
  return p;
}

// Linear conditions on a torus-frame vector commuting with the factor.
inline std::vector<Vec> centralizer_rows(const Amb& A, const EF& e) {
  std::vector<Vec> rows;
  const bool named = !e.tag.empty();
  if (e.kind == Kind::SU && !named) {
    auto u = units_of(A, e.coords);
    for (std::size_t k = 1; k < u.size(); ++k) {
      Vec v(A.r, 0);
      v[u[0].first] += u[0].second;
      v[u[k].first] -= u[k].second;
      rows.push_back(v);
    }
    return rows;
  }
  if (A.orth) {
    for (int p : planes_touched(A, e.coords)) rows.push_back(unit_vec(A.r, p));
    return rows;
  }
  if ((e.kind == Kind::SO && !named) || e.tag == "irr3in3c") {
    auto u = units_of(A, e.coords);
    for (std::size_t k = 1; k < u.size(); ++k) {
      Vec v(A.r, 0);
      v[u[0].first] += u[0].second;
      v[u[k].first] -= u[k].second;
      rows.push_back(v);
    }
    return rows;
  }
  for (int c : e.coords) rows.push_back(unit_vec(A.r, std::abs(c) - 1));
  return rows;
}

inline std::vector<Vec> centralizer_rows(const Amb& A, const std::vector<EF>& fs) {
  std::vector<Vec> rows;
  for (const auto& e : fs) {
    auto x = centralizer_rows(A, e);
    rows.insert(rows.end(), x.begin(), x.end());
  }
  if (A.a.family == Family::SU) rows.push_back(Vec(A.r, 1));
  return rows;
}

inline std::string coord_list(const std::vector<int>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

inline std::string render_factor(const Amb& A, const EF& e) {
  if (e.tag.empty()) {
    std::string head = kind_symbol(e.kind) + "(" + std::to_string(e.n) + ")";
    bool run = !e.coords.empty();
    for (std::size_t i = 0; i < e.coords.size(); ++i) run = run && e.coords[i] == e.coords[0] + static_cast<int>(i) && e.coords[i] > 0;
    if (run) return head + "@[" + std::to_string(e.coords.front()) + ".." + std::to_string(e.coords.back()) + "]";
    return head + "#sigma(" + coord_list(e.coords) + ")";
  }
  std::string head;
  if (e.tag == "g2so7") head = "G2";
  else if (e.tag == "spin7so8") head = "Spin(7)";
  else if (e.tag == "irr3in5") head = A.orth ? "SO(3)" : "Sp(1)";
  else if (e.tag == "irr3in3c") head = "SO(3)";
  else head = "Sp(1)";
  return head + "#" + e.tag + "(" + coord_list(e.coords) + ")";
}

inline std::string render(const Amb& A, const Cfg& c) {
  std::string s;
  for (const auto& e : c.f) s += (s.empty() ? "" : "x") + render_factor(A, e);
  for (const auto& v : c.torus) {
    std::string w;
    for (std::size_t i = 0; i < v.size(); ++i) w += (i ? "," : "") + std::to_string(v[i]);
    s += (s.empty() ? "" : "x") + std::string("S1w(") + w + ")";
  }
  if (s.empty()) s = "1";
  if (c.comps > 1) s = "Z" + std::to_string(c.comps) + "." + s;
  return s + " in " + format_ambient(A.a);
}

inline GroupExpr to_group(const Amb& A, const Cfg& c) { return parse_group(render(A, c)); }

inline Cfg blocks_only(const std::vector<EF>& f) {
  Cfg c;
  c.f = f;
  return c;
}

// Convert a group with explicit placements into factors plus torus.
inline Cfg to_cfg(const Amb& A, const GroupExpr& g) {
  Cfg c;
  c.comps = g.components;
  Structure s = expand(g, A.a);
  if (!s.ok) throw std::invalid_argument("cannot place " + format_group(g) + ": " + s.error);
  auto center = [&](const std::vector<int>& cs) {
    Vec v(A.r, 0);
    for (auto [i, sg] : units_of(A, cs)) v[i] += sg;
    return v;
  };
  // placements as the expander assigns them: explicit ones first, abstract ones first-fit
  std::vector<std::vector<int>> at(g.factors.size());
  std::set<int> used;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Embedding& e = g.factors[i].emb;
    if (e.kind == EmbKind::Block) {
      for (int x = e.lo; x <= e.hi; ++x) at[i].push_back(x);
    } else if (e.kind == EmbKind::Named) {
      int len = detail::named_length(g.factors[i], A.a.family);
      if (e.perm.empty())
        for (int x = 1; x <= len; ++x) at[i].push_back(x);
      else
        at[i].assign(e.perm.begin(), e.perm.begin() + len);
    }
    for (int x : at[i]) used.insert(std::abs(x));
  }
  int next = 1;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    if (f.emb.kind != EmbKind::Abstract) continue;
    if (f.kind == Kind::T) throw std::invalid_argument("abstract torus without placement");
    int len = detail::block_length(f, A.a.family);
    if (f.kind == Kind::G2) len = 7;
    if (f.kind == Kind::Spin && f.n == 7 && A.orth && A.a.n >= 8) len = 8;
    while (true) {
      bool ok = true;
      for (int x = next; x < next + len; ++x) ok = ok && !used.count(x);
      if (ok) break;
      ++next;
    }
    for (int x = next; x < next + len; ++x) at[i].push_back(x), used.insert(x);
    next += len;
  }
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    const Embedding& e = f.emb;
    if (e.kind == EmbKind::Circle) {
      c.torus.push_back(e.w);
      continue;
    }
    const std::vector<int>& cs = at[i];
    std::string tag = e.kind == EmbKind::Named && e.tag != "sigma" ? e.tag : "";
    if (e.kind == EmbKind::Abstract && f.kind == Kind::G2) tag = "g2so7";
    if (e.kind == EmbKind::Abstract && f.kind == Kind::Spin && cs.size() == 8) tag = "spin7so8";
    if (!tag.empty() && tag != "du1") {
      EF x;
      x.tag = tag;
      x.coords = cs;
      if (tag == "g2so7") x.kind = Kind::G2, x.n = 2;
      else if (tag == "spin7so8") x.kind = Kind::Spin, x.n = 7;
      else if (tag == "irr3in5") x.kind = A.orth ? Kind::SO : Kind::Sp, x.n = A.orth ? 3 : 1;
      else if (tag == "irr3in3c") x.kind = Kind::SO, x.n = 3;
      else x.kind = Kind::Sp, x.n = 1;
      c.f.push_back(x);
      continue;
    }
    if (tag == "du1") {
      c.torus.push_back(center(cs));
      continue;
    }
    switch (f.kind) {
      case Kind::U:
      case Kind::SU:
        if (f.n >= 2) c.f.push_back({Kind::SU, f.n, "", cs});
        if (f.kind == Kind::U) c.torus.push_back(center(cs));
        break;
      case Kind::SUc: {
        std::size_t at = 0;
        std::vector<std::vector<int>> segs;
        for (int m : f.comps) {
          std::size_t w = A.orth ? 2 * m : m;
          segs.emplace_back(cs.begin() + at, cs.begin() + at + w);
          at += w;
        }
        for (std::size_t j = 0; j < segs.size(); ++j) {
          int m = f.comps[j];
          if (m >= 2) c.f.push_back({Kind::SU, m, "", segs[j]});
          if (j + 1 < segs.size()) {
            Vec a = center(segs[j]), b = center(segs[j + 1]);
            Vec v(A.r, 0);
            for (int k = 0; k < A.r; ++k) v[k] = f.comps[j + 1] * a[k] - m * b[k];
            c.torus.push_back(lattice::primitive(v));
          }
        }
        break;
      }
      case Kind::SO:
      case Kind::Spin:
        if (f.n == 2) {
          Vec v(A.r, 0);
          if (A.orth) {
            auto u = units_of(A, cs);
            if (u.empty()) throw std::invalid_argument("SO(2) off a coordinate plane: " + format_factor(f));
            v[u[0].first] = 1;
          } else {
            v[std::abs(cs[0]) - 1] += cs[0] < 0 ? -1 : 1;
            v[std::abs(cs[1]) - 1] -= cs[1] < 0 ? -1 : 1;
          }
          c.torus.push_back(v);
        } else if (f.n >= 3) {
          c.f.push_back({Kind::SO, f.n, "", cs});
        }
        break;
      case Kind::Sp: c.f.push_back({Kind::Sp, f.n, "", cs}); break;
      case Kind::G2: c.f.push_back({Kind::G2, 2, "g2so7", cs}); break;
      case Kind::T: throw std::invalid_argument("abstract torus without placement");
    }
  }
  c.torus = hnf(c.torus, A.r);
  return c;
}

inline std::set<int> used_coords(const std::vector<EF>& fs) {
  std::set<int> u;
  for (const auto& e : fs)
    for (int c : e.coords) u.insert(std::abs(c));
  return u;
}

inline std::vector<int> sorted_abs(std::vector<int> c) {
  for (auto& x : c) x = std::abs(x);
  std::sort(c.begin(), c.end());
  return c;
}

inline std::vector<Vec> block_cartans(const Amb& A, const std::vector<EF>& fs) {
  if (fs.empty()) return {};
  Structure s = expand(to_group(A, blocks_only(fs)), A.a);
  if (!s.ok) return {};
  return s.cartan_all();
}

inline bool accept(const QuotientId& q, const EnumConfig& cfg) {
  return q.kind == QKind::Sphere || (cfg.include_projective && q.kind == QKind::Projective);
}

// ---------------------------------------------------------------- shrinking K to H

// Block lists obtained from K's factors by one sphere-pattern move.
inline std::vector<std::vector<EF>> shrink_blocks(const Amb& A, const std::vector<EF>& K) {
  std::vector<std::vector<EF>> out{K};
  auto with = [&](std::size_t i, const std::vector<EF>& repl) {
    std::vector<EF> x;
    for (std::size_t j = 0; j < K.size(); ++j) {
      if (j == i) x.insert(x.end(), repl.begin(), repl.end());
      else x.push_back(K[j]);
    }
    out.push_back(x);
  };
  auto full_planes = [&](const std::vector<int>& cs) {
    std::set<int> in;
    for (int c : cs) in.insert(std::abs(c));
    std::vector<int> p;
    for (int q = 0; q < A.r; ++q)
      if (in.count(2 * q + 1) && in.count(2 * q + 2)) p.push_back(q);
    return p;
  };
  auto su_on = [&](const std::vector<int>& planes, const std::vector<int>& signs) {
    std::vector<int> cs;
    for (std::size_t k = 0; k < planes.size(); ++k) {
      int a = 2 * planes[k] + 1, b = a + 1;
      if (signs[k] > 0) cs.push_back(a), cs.push_back(b);
      else cs.push_back(b), cs.push_back(a);
    }
    return EF{Kind::SU, static_cast<int>(planes.size()), "", cs};
  };
  for (std::size_t i = 0; i < K.size(); ++i) {
    const EF& e = K[i];
    if (!e.tag.empty()) {
      if (e.tag == "g2so7") with(i, {EF{Kind::SU, 3, "", std::vector<int>(e.coords.begin(), e.coords.begin() + 6)}});
      else if (e.tag == "spin7so8") {
        with(i, {EF{Kind::SU, 4, "", e.coords}});
        with(i, {EF{Kind::G2, 2, "g2so7", std::vector<int>(e.coords.begin(), e.coords.begin() + 7)}});
      } else {
        with(i, {});
      }
      continue;
    }
    if (e.kind == Kind::SU) {
      const int w = A.orth ? 2 : 1;
      for (int j = 0; j < e.n; ++j) {
        std::vector<int> cs;
        for (int k = 0; k < e.n; ++k)
          if (k != j) cs.insert(cs.end(), e.coords.begin() + w * k, e.coords.begin() + w * k + w);
        if (e.n - 1 >= 2) with(i, {EF{Kind::SU, e.n - 1, "", cs}});
        else with(i, {});
      }
    } else if (e.kind == Kind::SO) {
      if (!A.orth) {
        with(i, {});
        continue;
      }
      for (std::size_t j = 0; j < e.coords.size(); ++j) {
        std::vector<int> cs;
        for (std::size_t k = 0; k < e.coords.size(); ++k)
          if (k != j) cs.push_back(e.coords[k]);
        if (e.n - 1 >= 3) with(i, {EF{Kind::SO, e.n - 1, "", cs}});
        else with(i, {});
      }
      auto fp = full_planes(e.coords);
      if ((e.n == 4 || e.n == 5) && fp.size() == 2) {
        with(i, {su_on(fp, {1, 1})});
        with(i, {su_on(fp, {1, -1})});
      }
      if (e.n == 6 && fp.size() == 3)
        for (auto s : std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}) with(i, {su_on(fp, s)});
      if (e.n == 7 && fp.size() == 3) {
        EF g = su_on(fp, {1, 1, 1});
        std::set<int> in(g.coords.begin(), g.coords.end());
        for (int c : e.coords)
          if (!in.count(std::abs(c))) g.coords.push_back(std::abs(c));
        with(i, {EF{Kind::G2, 2, "g2so7", g.coords}});
      }
    } else if (e.kind == Kind::Sp) {
      for (std::size_t j = 0; j < e.coords.size(); ++j) {
        std::vector<int> cs;
        for (std::size_t k = 0; k < e.coords.size(); ++k)
          if (k != j) cs.push_back(e.coords[k]);
        if (e.n - 1 >= 1) with(i, {EF{Kind::Sp, e.n - 1, "", cs}});
        else with(i, {});
      }
    }
  }
  // Sp(k) x Sp(1) -> Sp(k-1) x diagonal Sp(1)
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i].kind != Kind::Sp || !K[i].tag.empty()) continue;
    for (std::size_t s = 0; s < K.size(); ++s) {
      if (s == i || K[s].kind != Kind::Sp || K[s].n != 1 || !K[s].tag.empty()) continue;
      for (int j : K[i].coords) {
        std::vector<EF> x;
        for (std::size_t t = 0; t < K.size(); ++t) {
          if (t == s) continue;
          if (t == i) {
            std::vector<int> cs;
            for (int c : K[i].coords)
              if (c != j) cs.push_back(c);
            if (!cs.empty()) x.push_back({Kind::Sp, K[i].n - 1, "", cs});
            x.push_back({Kind::Sp, 1, "dsp1", {K[s].coords[0], j}});
          } else {
            x.push_back(K[t]);
          }
        }
        out.push_back(x);
      }
    }
  }
  return out;
}

// Sublattices of Z of codimension one, cut out by small functionals in the reduced basis of Z.
inline std::vector<std::vector<Vec>> hyperplanes(const std::vector<Vec>& Z, int r, int kmax) {
  const int d = static_cast<int>(Z.size());
  std::vector<std::vector<Vec>> out;
  if (d == 0) return out;
  if (d == 1) {
    out.push_back({});
    return out;
  }
  const int bound = d <= 2 ? kmax : (d == 3 ? std::min(kmax, 3) : std::min(kmax, 1));
  std::vector<long long> phi(d, -bound);
  std::set<std::string> seen;
  while (true) {
    long long g = 0;
    for (auto x : phi) g = std::gcd(g, std::llabs(x));
    long long first = 0;
    for (auto x : phi)
      if (x) {
        first = x;
        break;
      }
    if (g == 1 && first > 0) {
      std::vector<Vec> T;
      for (const auto& c : kernel({Vec(phi.begin(), phi.end())}, d)) {
        Vec v(r, 0);
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < r; ++k) v[k] += c[i] * Z[i][k];
        T.push_back(v);
      }
      T = hnf(T, r);
      if (seen.insert(vecs_key(T)).second) out.push_back(T);
    }
    int i = 0;
    while (i < d && phi[i] == bound) phi[i++] = -bound;
    if (i == d) break;
    ++phi[i];
  }
  return out;
}

struct Piece {
  Cfg cfg;
  GroupExpr group;
  std::string text;
  QuotientId witness;
};

// H inside K with K/H a sphere (or projective space when allowed); target_rank < 0 means any rank.
inline std::vector<Piece> shrink(const Amb& A, const Cfg& K, const EnumConfig& cfg, int target_rank = -1) {
  std::vector<Piece> out;
  GroupExpr Kg = to_group(A, K);
  Structure ks = expand(Kg, A.a);
  if (!ks.ok) return out;
  const auto kperp = kernel(ks.cartan_all(), A.r);
  std::set<std::string> seen;
  for (const auto& hb : shrink_blocks(A, K.f)) {
    auto rows = centralizer_rows(A, hb);
    rows.insert(rows.end(), kperp.begin(), kperp.end());
    auto Z = kernel(rows, A.r);
    int brank = 0;
    if (!hb.empty()) brank = rank(to_group(A, blocks_only(hb)));
    std::vector<std::vector<Vec>> tori;
    const int zd = static_cast<int>(Z.size());
    if (target_rank < 0 || brank + zd == target_rank) tori.push_back(Z);
    if (target_rank < 0 || brank + zd - 1 == target_rank)
      for (auto& T : hyperplanes(Z, A.r, cfg.kmax)) tori.push_back(T);
    for (auto& T : tori) {
      Cfg h;
      h.f = hb;
      h.torus = T;
      std::string text = render(A, h);
      if (!seen.insert(text).second) continue;
      GroupExpr hg = parse_group(text);
      if (dim(hg) >= dim(Kg)) continue;
      QuotientId q = classify_quotient(Kg, hg);
      if (!accept(q, cfg)) continue;
      out.push_back({h, hg, text, q});
    }
  }
  return out;
}

// ---------------------------------------------------------------- growing H to K

struct Growth {
  std::vector<EF> blocks;
  std::vector<Vec> forced;  // torus used verbatim together with the torus of H
};

inline std::vector<Growth> grow_blocks(const Amb& A, const Cfg& H) {
  const auto& F = H.f;
  std::vector<Growth> out{{F, {}}};
  const auto used = used_coords(F);
  std::vector<int> free;
  for (int c = 1; c <= A.N; ++c)
    if (!used.count(c)) free.push_back(c);
  std::vector<int> free_planes;
  if (A.orth)
    for (int p = 0; p < A.r; ++p)
      if (!used.count(2 * p + 1) && !used.count(2 * p + 2)) free_planes.push_back(p);
  // complex units on free coordinates, with both orientations in orthogonal ambients
  std::vector<std::vector<int>> free_units;
  if (A.orth) {
    for (int p : free_planes) {
      free_units.push_back({2 * p + 1, 2 * p + 2});
      free_units.push_back({2 * p + 2, 2 * p + 1});
    }
  } else {
    for (int c : free) free_units.push_back({c});
  }
  auto with = [&](std::size_t i, const EF& repl) {
    std::vector<EF> x = F;
    x[i] = repl;
    out.push_back({x, {}});
  };
  auto add = [&](const EF& extra) {
    std::vector<EF> x = F;
    x.push_back(extra);
    out.push_back({x, {}});
  };
  auto cat = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (std::size_t i = 0; i < F.size(); ++i) {
    const EF& e = F[i];
    if (e.tag.empty() && e.kind == Kind::SU) {
      for (const auto& u : free_units) with(i, {Kind::SU, e.n + 1, "", cat(e.coords, u)});
      if (A.orth) {
        if (e.n == 2) {
          with(i, {Kind::SO, 4, "", sorted_abs(e.coords)});
          for (int c : free) {
            auto cs = e.coords;
            cs.push_back(c);
            with(i, {Kind::SO, 5, "", sorted_abs(cs)});
          }
        }
        if (e.n == 3) {
          with(i, {Kind::SO, 6, "", sorted_abs(e.coords)});
          for (int c : free) with(i, {Kind::G2, 2, "g2so7", cat(e.coords, {c})});
        }
        if (e.n == 4) with(i, {Kind::Spin, 7, "spin7so8", e.coords});
      }
    } else if (e.tag.empty() && e.kind == Kind::SO && A.orth) {
      for (int c : free) with(i, {Kind::SO, e.n + 1, "", sorted_abs(cat(e.coords, {c}))});
    } else if (e.tag.empty() && e.kind == Kind::Sp) {
      for (int c : free) with(i, {Kind::Sp, e.n + 1, "", sorted_abs(cat(e.coords, {c}))});
    } else if (e.tag == "g2so7" && A.orth) {
      int x = std::abs(e.coords[6]);
      int p = A.plane_of(x);
      if (p >= 0) {
        int partner = x % 2 ? x + 1 : x - 1;
        if (!used.count(partner)) {
          auto cs = std::vector<int>(e.coords.begin(), e.coords.begin() + 6);
          cs.push_back(std::min(x, partner));
          cs.push_back(std::max(x, partner));
          with(i, {Kind::Spin, 7, "spin7so8", cs});
        }
      }
    } else if (e.tag == "dsp1") {
      int a = e.coords[0], b = e.coords[1];
      Vec v(A.r, 0);
      v[std::abs(a) - 1] += 1;
      v[std::abs(b) - 1] -= 1;
      out.push_back({F, {v}});
      for (auto [i1, j1] : {std::pair<int, int>{a, b}, std::pair<int, int>{b, a}}) {
        std::vector<EF> x;
        for (std::size_t t = 0; t < F.size(); ++t)
          if (t != i) x.push_back(F[t]);
        auto base = x;
        base.push_back({Kind::Sp, 1, "", {i1}});
        base.push_back({Kind::Sp, 1, "", {j1}});
        out.push_back({base, {}});
        for (std::size_t t = 0; t < x.size(); ++t) {
          if (x[t].kind != Kind::Sp || !x[t].tag.empty()) continue;
          auto m = x;
          m[t] = {Kind::Sp, x[t].n + 1, "", sorted_abs(cat(x[t].coords, {j1}))};
          m.push_back({Kind::Sp, 1, "", {i1}});
          out.push_back({m, {}});
        }
      }
    }
  }
  // new rank-one factors on free coordinates
  // in orthogonal ambients units come in orientation pairs; fix the first orientation
  const std::size_t step = A.orth ? 2 : 1;
  for (std::size_t a = 0; a < free_units.size(); a += step)
    for (std::size_t b = (a / step + 1) * step; b < free_units.size(); ++b) add({Kind::SU, 2, "", cat(free_units[a], free_units[b])});
  if (A.orth) {
    for (int p : free_planes)
      for (int c : free)
        if (A.plane_of(c) != p) add({Kind::SO, 3, "", sorted_abs({2 * p + 1, 2 * p + 2, c})});
  }
  if (A.a.family == Family::Sp)
    for (int c : free) add({Kind::Sp, 1, "", {c}});
  return out;
}

// Named rank-one factors whose torus already lies in the torus of H.
inline std::vector<Growth> grow_named(const Amb& A, const Cfg& H) {
  std::vector<Growth> out;
  const auto used = used_coords(H.f);
  std::vector<int> free;
  for (int c = 1; c <= A.N; ++c)
    if (!used.count(c)) free.push_back(c);
  if (H.torus.empty()) return out;
  auto try_add = [&](const EF& e) {
    auto cart = block_cartans(A, {e});
    if (cart.empty() || !lattice::contains_span(H.torus, cart)) return;
    std::vector<EF> x = H.f;
    x.push_back(e);
    out.push_back({x, {}});
  };
  if (A.orth) {
    std::vector<int> fp;
    for (int p = 0; p < A.r; ++p)
      if (!used.count(2 * p + 1) && !used.count(2 * p + 2)) fp.push_back(p);
    for (int p : fp)
      for (int q : fp) {
        if (p == q) continue;
        for (int c : free) {
          if (A.plane_of(c) == p || A.plane_of(c) == q) continue;
          for (int s : {1, -1}) {
            std::vector<int> cs{2 * p + 1, 2 * p + 2};
            if (s > 0) cs.insert(cs.end(), {2 * q + 1, 2 * q + 2});
            else cs.insert(cs.end(), {2 * q + 2, 2 * q + 1});
            cs.push_back(c);
            try_add({Kind::SO, 3, "irr3in5", cs});
          }
        }
      }
    return out;
  }
  for (int a : free)
    for (int b : free) {
      if (b == a) continue;
      for (int s : {1, -1}) {
        if (A.a.family == Family::SU && s < 0) continue;
        if (a < b)
          for (int c : free)
            if (c != a && c != b) try_add({Kind::SO, 3, "irr3in3c", {a, s * b, c}});
        if (A.a.family == Family::Sp) {
          try_add({Kind::Sp, 1, "irr3in5", {a, s * b}});
          if (a < b) try_add({Kind::Sp, 1, "dsp1", {a, s * b}});
        }
      }
    }
  return out;
}

inline std::vector<Piece> grow(const Amb& A, const Cfg& H, const EnumConfig& cfg) {
  std::vector<Piece> out;
  GroupExpr Hg = to_group(A, H);
  Structure hs = expand(Hg, A.a);
  if (!hs.ok) return out;
  const auto hc = hs.cartan_all();
  const long long dimG = dim(ambient_group(A.a));
  const int rg = A.r;
  std::set<std::string> seen;
  auto options = grow_blocks(A, H);
  for (auto& g : grow_named(A, H)) options.push_back(g);
  for (const auto& opt : options) {
    if (!opt.blocks.empty() && !expand(to_group(A, blocks_only(opt.blocks)), A.a).ok) continue;
    const auto bc = block_cartans(A, opt.blocks);
    std::vector<std::vector<Vec>> tori;
    if (!opt.forced.empty()) {
      auto T = H.torus;
      T.insert(T.end(), opt.forced.begin(), opt.forced.end());
      tori.push_back(hnf(T, A.r));
    } else {
      auto zrows = centralizer_rows(A, opt.blocks);
      auto ZK = kernel(zrows, A.r);
      auto S = lattice::concat(hc, bc);
      auto rows = zrows;
      for (const auto& v : kernel(S, A.r)) rows.push_back(v);
      auto Tmin = kernel(rows, A.r);
      if (!lattice::contains_span(lattice::concat(Tmin, bc), hc)) continue;
      tori.push_back(Tmin);
      if (ZK.size() > Tmin.size()) {
        tori.push_back(ZK);
        if (ZK.size() >= Tmin.size() + 2) {
          const int d = static_cast<int>(ZK.size());
          std::vector<long long> c(d, -1);
          const int base = lattice::rank(Tmin);
          while (true) {
            Vec w(A.r, 0);
            for (int i = 0; i < d; ++i)
              for (int k = 0; k < A.r; ++k) w[k] += c[i] * ZK[i][k];
            auto cand = Tmin;
            cand.push_back(w);
            if (lattice::rank(cand) == base + 1) {
              auto rws = zrows;
              for (const auto& v : kernel(cand, A.r)) rws.push_back(v);
              tori.push_back(kernel(rws, A.r));
            }
            int i = 0;
            while (i < d && c[i] == 1) c[i++] = -1;
            if (i == d) break;
            ++c[i];
          }
        }
      }
    }
    for (auto& T : tori) {
      Cfg k;
      k.f = opt.blocks;
      k.torus = T;
      std::string text = render(A, k);
      if (!seen.insert(text).second) continue;
      GroupExpr kg;
      try {
        kg = parse_group(text);
      } catch (const std::exception&) {
        continue;
      }
      if (dim(kg) <= dim(Hg) || dim(kg) >= dimG || rank(kg) > rg || rank(kg) > rank(Hg) + 1) continue;
      QuotientId q = classify_quotient(kg, Hg);
      if (!accept(q, cfg)) continue;
      out.push_back({k, kg, text, q});
    }
  }
  return out;
}

// ---------------------------------------------------------------- structural equivalence

struct GroupShape {
  struct B {
    Kind kind;
    int n;
    std::string tag;
    std::vector<int> coords;
    std::vector<Vec> cartan;
  };
  std::vector<B> blocks;
  std::vector<Vec> cartan_all;
  int comps = 1;
};

inline GroupShape shape_of(const GroupExpr& g, const Ambient& a) {
  Structure s = expand(g, a);
  if (!s.ok) throw std::invalid_argument(s.error);
  GroupShape sh;
  for (const auto& b : s.blocks) sh.blocks.push_back({b.kind, b.n, b.tag, b.coords, b.cartan});
  sh.cartan_all = s.cartan_all();
  sh.comps = g.components;
  return sh;
}

// Signed permutation of the torus frame, acting on coordinates and frame vectors.
struct FrameMap {
  const Amb* A;
  std::vector<int> perm, sign;

  int coord(int c) const {
    if (!A->orth) return perm[c - 1] + 1;
    int p = (c - 1) / 2;
    if (p >= A->r) return c;
    bool low = c % 2 == 1;
    if (sign[p] < 0) low = !low;
    return 2 * perm[p] + (low ? 1 : 2);
  }
  Vec vec(const Vec& v) const {
    Vec w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[perm[i]] = sign[i] * v[i];
    return w;
  }
};

inline std::string shape_key(const GroupShape& g, const FrameMap& m) {
  std::vector<std::string> keys;
  for (const auto& b : g.blocks) {
    std::vector<int> cs;
    for (int c : b.coords) cs.push_back(m.coord(c));
    std::sort(cs.begin(), cs.end());
    std::vector<Vec> cart;
    for (const auto& v : b.cartan) cart.push_back(m.vec(v));
    keys.push_back(kind_symbol(b.kind) + std::to_string(b.n) + ":" + b.tag + ":" + coord_list(cs) + ":" + rref_key(cart, m.A->r));
  }
  std::sort(keys.begin(), keys.end());
  std::string k;
  for (const auto& x : keys) k += x + ";";
  std::vector<Vec> all;
  for (const auto& v : g.cartan_all) all.push_back(m.vec(v));
  return k + "#" + rref_key(all, m.A->r) + "#" + std::to_string(g.comps);
}

inline std::string coord_signature(const Amb& A, const std::array<GroupShape, 3>& gs, int i) {
  auto in_unit = [&](int c) { return A.orth ? (c - 1) / 2 == i : c - 1 == i; };
  std::string sig;
  for (const auto& g : gs) {
    std::vector<std::string> parts;
    for (const auto& b : g.blocks) {
      int cnt = 0;
      for (int c : b.coords) cnt += in_unit(c);
      if (cnt) parts.push_back(kind_symbol(b.kind) + std::to_string(b.n) + b.tag + "*" + std::to_string(cnt));
    }
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) sig += p + ",";
    bool support = false;
    for (const auto& v : g.cartan_all) support = support || v[i] != 0;
    sig += support ? "S|" : "-|";
  }
  return sig;
}

inline bool same_shapes(const Amb& A, const std::array<GroupShape, 3>& a, const std::array<GroupShape, 3>& b) {
  const int r = A.r;
  FrameMap id{&A, std::vector<int>(r), std::vector<int>(r, 1)};
  std::iota(id.perm.begin(), id.perm.end(), 0);
  std::array<std::string, 3> target;
  for (int g = 0; g < 3; ++g) target[g] = shape_key(b[g], id);
  std::vector<std::string> sa(r), sb(r);
  for (int i = 0; i < r; ++i) sa[i] = coord_signature(A, a, i), sb[i] = coord_signature(A, b, i);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  const bool signed_frame = A.orth || A.a.family == Family::Sp;
  FrameMap m{&A, std::vector<int>(r, -1), std::vector<int>(r, 1)};
  std::vector<bool> taken(r, false);
  auto leaf = [&]() {
    const long long nsign = signed_frame ? (1LL << r) : 1;
    for (long long mask = 0; mask < nsign; ++mask) {
      for (int i = 0; i < r; ++i) m.sign[i] = (mask >> i) & 1 ? -1 : 1;
      bool ok = true;
      for (int g = 0; g < 3 && ok; ++g) ok = shape_key(a[g], m) == target[g];
      if (ok) return true;
    }
    return false;
  };
  std::function<bool(int)> go = [&](int i) {
    if (i == r) return leaf();
    for (int j = 0; j < r; ++j) {
      if (taken[j] || sa[i] != sb[j]) continue;
      taken[j] = true;
      m.perm[i] = j;
      if (go(i + 1)) return true;
      taken[j] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace enumeration

// ---------------------------------------------------------------- public interface

struct Candidate {
  Diagram diagram;
  std::string text;
  long long chi = 0;
  long long dim = 0;
};

inline std::vector<GroupExpr> enumerate_Kplus(const GroupExpr& G, const EnumConfig& cfg = {}) {
  std::vector<GroupExpr> out;
  for (auto& k : maximal_rank_subgroups(G, cfg.max_factors, true))
    if (four_factor_split_ok(k)) out.push_back(k);
  return out;
}

inline std::vector<std::pair<GroupExpr, QuotientId>> enumerate_H(const GroupExpr& K, const EnumConfig& cfg = {}) {
  if (!K.ambient) throw std::invalid_argument("K needs an ambient group");
  enumeration::Amb A(*K.ambient);
  std::vector<std::pair<GroupExpr, QuotientId>> out;
  for (auto& p : enumeration::shrink(A, enumeration::to_cfg(A, K), cfg)) out.push_back({p.group, p.witness});
  return out;
}

inline std::vector<std::pair<GroupExpr, QuotientId>> enumerate_Kminus(const GroupExpr& H, const EnumConfig& cfg = {}) {
  if (!H.ambient) throw std::invalid_argument("H needs an ambient group");
  enumeration::Amb A(*H.ambient);
  std::vector<std::pair<GroupExpr, QuotientId>> out;
  for (auto& p : enumeration::grow(A, enumeration::to_cfg(A, H), cfg)) out.push_back({p.group, p.witness});
  return out;
}

inline std::vector<Candidate> enumerate_candidates(const GroupExpr& G, const EnumConfig& cfg = {}) {
  using namespace enumeration;
  const Ambient amb = simple_ambient(G);
  const Amb A(amb);
  const GroupExpr Gfull = ambient_group(amb);
  const int rg = rank(Gfull);
  if (rg > cfg.rank_bound) throw std::invalid_argument("rank of " + format_group(G) + " exceeds the rank bound");
  std::map<std::string, long long> chi_cache;
  auto chi_of = [&](const std::string& text, const GroupExpr& g) {
    auto it = chi_cache.find(text);
    if (it != chi_cache.end()) return it->second;
    return chi_cache[text] = euler_char(Gfull, g);
  };
  std::map<std::string, Candidate> found;
  std::vector<Candidate> all;
  std::set<std::string> seen_h;
  const std::vector<std::array<int, 3>> markers = {{1, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {2, 1, 1},
                                                   {3, 3, 1}, {3, 1, 3}, {3, 3, 3}, {3, 1, 1}};
  for (const auto& K0 : enumerate_Kplus(G, cfg)) {
    const Cfg k0 = to_cfg(A, K0);
    for (const auto& h : shrink(A, k0, cfg, rg - 1)) {
      if (!seen_h.insert(h.text).second) continue;
      auto pool = grow(A, h.cfg, cfg);
      const std::string k0text = render(A, k0);
      if (std::none_of(pool.begin(), pool.end(), [&](const Piece& p) { return p.text == k0text; }))
        pool.push_back({k0, to_group(A, k0), k0text, classify_quotient(to_group(A, k0), h.group)});
      const long long chi_h = chi_of(h.text, h.group);
      for (const auto& kp : pool) {
        if (rank(kp.group) != rg || factor_count(kp.group) > 4) continue;
        const long long lp = dim(kp.group) - dim(h.group);
        if (lp % 2 == 0) continue;
        for (const auto& km : pool) {
          if (rank(km.group) == rg && km.text < kp.text) continue;
          const long long lm = dim(km.group) - dim(h.group);
          if (chi_of(km.text, km.group) + chi_of(kp.text, kp.group) - chi_h <= 0) continue;
          for (const auto& mk : markers) {
            if (mk[0] > 1 && lm > 1 && lp > 1) break;
            if (mk[1] > 1 && lp > 1) continue;
            if (mk[2] > 1 && lm > 1) continue;
            if (mk[0] > 1 && h.cfg.f.empty() && h.cfg.torus.empty()) continue;
            auto mark = [&](const Cfg& c, int m) {
              Cfg x = c;
              x.comps = m;
              return to_group(A, x);
            };
            Diagram d;
            try {
              d = make_diagram(G, mark(km.cfg, mk[1]), mark(kp.cfg, mk[2]), mark(h.cfg, mk[0]));
            } catch (const std::exception&) {
              continue;
            }
            if (!all_pass(validate_diagram(d)) || !all_pass(necessary_filters(d))) continue;
            long long chi = 0;
            try {
              chi = euler_char_M(d);
            } catch (const std::exception&) {
              continue;
            }
            if (chi <= 0) continue;
            Diagram nd = normalize_diagram(d);
            Candidate c{nd, format_diagram(nd), chi, dim_M(nd)};
            if (cfg.dedupe) found.emplace(c.text, c);
            else all.push_back(c);
          }
        }
      }
    }
  }
  if (cfg.dedupe)
    for (auto& [k, c] : found) all.push_back(c);
  else
    std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) { return x.text < y.text; });
  return all;
}

// Same diagram up to a signed permutation of the torus frame, with K- and K+ possibly exchanged.
inline bool equivalent_diagrams(const Diagram& a, const Diagram& b) {
  using namespace enumeration;
  const Ambient amb = diagram_ambient(a);
  if (!(diagram_ambient(b) == amb)) return false;
  const Amb A(amb);
  std::array<GroupShape, 3> sa{shape_of(a.H, amb), shape_of(a.Kminus, amb), shape_of(a.Kplus, amb)};
  std::array<GroupShape, 3> sb{shape_of(b.H, amb), shape_of(b.Kminus, amb), shape_of(b.Kplus, amb)};
  if (same_shapes(A, sa, sb)) return true;
  std::swap(sb[1], sb[2]);
  return same_shapes(A, sa, sb);
}

struct CrossCheckEntry {
  std::string id;
  bool found = false;
  std::string match;
};

struct CrossCheckReport {
  std::string family;
  long long n = 0;
  std::size_t candidates = 0;
  std::vector<CrossCheckEntry> entries;

  std::size_t found() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.found; }));
  }
  bool complete() const { return found() == entries.size(); }
};

inline std::string bucket_key(const Diagram& d, long long chi) {
  long long a = dim(d.Kminus), b = dim(d.Kplus);
  int ca = d.Kminus.components, cb = d.Kplus.components;
  if (std::make_pair(a, ca) > std::make_pair(b, cb)) std::swap(a, b), std::swap(ca, cb);
  return std::to_string(dim(d.H)) + "/" + std::to_string(d.H.components) + "|" + std::to_string(a) + "/" +
         std::to_string(ca) + "|" + std::to_string(b) + "/" + std::to_string(cb) + "|" + std::to_string(chi);
}

inline CrossCheckReport cross_check_catalog(const std::string& family, long long n, const EnumConfig& cfg = {}) {
  CrossCheckReport rep;
  rep.family = family;
  rep.n = n;
  EnumConfig c = cfg;
  if (family == "Spin-odd") c.include_projective = true;
  const GroupExpr G = parse_group(family_group(family, n));
  const auto cands = enumerate_candidates(G, c);
  rep.candidates = cands.size();
  std::map<std::string, std::vector<const Candidate*>> buckets;
  for (const auto& x : cands) buckets[bucket_key(x.diagram, x.chi)].push_back(&x);
  for (const auto& e : catalog()) {
    if (e.family != family || n < e.n_min || n > e.n_max) continue;
    CrossCheckEntry ce{e.id, false, ""};
    try {
      Diagram d = normalize_diagram(instantiate_entry(e, n));
      for (const auto* x : buckets[bucket_key(d, euler_char_M(d))])
        if (equivalent_diagrams(d, x->diagram)) {
          ce.found = true;
          ce.match = x->text;
          break;
        }
    } catch (const std::exception& ex) {
      ce.match = std::string("error: ") + ex.what();
    }
    rep.entries.push_back(ce);
  }
  return rep;
}

}  // namespace cohom
