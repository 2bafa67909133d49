#pragma once

// Connected maximal-rank subgroups of the classical simple groups in standard block form.

#include "groups.hpp"

#include <set>
#include <string>
#include <vector>

namespace cohom {

using Partition = std::vector<int>;

// Non-increasing partitions of n (n = 0 gives the empty partition).
inline std::vector<Partition> partitions(int n, int max_part = -1) {
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = max_part; first >= 1; --first)
    for (auto& rest : partitions(n - first, first)) {
      Partition p{first};
      p.insert(p.end(), rest.begin(), rest.end());
      out.push_back(p);
    }
  return out;
}

inline Ambient simple_ambient(const GroupExpr& G) {
  if (G.factors.size() != 1 || G.factors[0].emb.kind != EmbKind::Abstract || G.components != 1) {
    throw std::invalid_argument("expected a single classical simple group");
  }
  const Factor& f = G.factors[0];
  Ambient a;
  a.n = f.n;
  switch (f.kind) {
    case Kind::SU: a.family = Family::SU; if (f.n < 2) throw std::invalid_argument("SU(1) is trivial"); break;
    case Kind::SO: a.family = Family::SO; break;
    case Kind::Spin: a.family = Family::Spin; break;
    case Kind::Sp: a.family = Family::Sp; break;
    default: throw std::invalid_argument("expected a classical simple group, got " + format_group(G));
  }
  if (orthogonal(a) && (a.n < 3 || a.n == 4)) throw std::invalid_argument(format_group(G) + " is not simple");
  return a;
}

namespace detail {

struct BlockWriter {
  Ambient amb;
  int next = 1;
  std::vector<std::string> parts;

  void put(const std::string& sym, int n, int width) {
    parts.push_back(sym + "(" + std::to_string(n) + ")@[" + std::to_string(next) + ".." + std::to_string(next + width - 1) + "]");
    next += width;
  }
  GroupExpr done() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "x" : "") + parts[i];
    if (s.empty()) s = "1";
    return parse_group(s + " in " + format_ambient(amb));
  }
};

}  // namespace detail

// All rank-equal subgroups of the standard block shape, factor_count <= max_factors.
inline std::vector<GroupExpr> maximal_rank_subgroups(const GroupExpr& G, int max_factors, bool proper_only) {
  Ambient amb = simple_ambient(G);
  std::vector<GroupExpr> raw;
  if (amb.family == Family::SU) {
    for (const auto& p : partitions(amb.n)) {
      std::string s = "SU{";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      s += "} in " + format_ambient(amb);
      if (p.size() == 1) s = "SU(" + std::to_string(amb.n) + ")@[1.." + std::to_string(amb.n) + "] in " + format_ambient(amb);
      raw.push_back(parse_group(s));
    }
  } else if (amb.family == Family::Sp) {
    for (int s = 0; s <= amb.n; ++s)
      for (const auto& pu : partitions(s))
        for (const auto& ps : partitions(amb.n - s)) {
          detail::BlockWriter w{amb};
          for (int m : pu) w.put("U", m, m);
          for (int m : ps) w.put("Sp", m, m);
          raw.push_back(w.done());
        }
  } else {
    const int half = amb.n / 2;
    const bool odd = amb.n % 2 == 1;
    for (int k = 0; k <= (odd ? half : 0); ++k)
      for (int s = 0; s <= half - k; ++s)
        for (const auto& pso : partitions(s))
          for (const auto& pu : partitions(half - k - s)) {
            detail::BlockWriter w{amb};
            for (int m : pso) w.put("SO", 2 * m, 2 * m);
            for (int m : pu) w.put("U", m, 2 * m);
            if (k > 0) w.put("SO", 2 * k + 1, 2 * k + 1);
            raw.push_back(w.done());
          }
  }
  std::vector<GroupExpr> out;
  std::set<std::string> seen;
  const long long full = dim(ambient_group(amb));
  for (auto& g : raw) {
    if (factor_count(g) > max_factors) continue;
    if (proper_only && dim(g) == full) continue;
    if (!seen.insert(format_group(normalize_group(g))).second) continue;
    out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------- four-factor split screening

namespace detail {

// Simple and circle atoms of the cover, with low-rank identifications.
inline std::vector<std::pair<char, int>> atoms(const GroupExpr& g) {
  std::vector<std::pair<char, int>> a;  // 'T' circle, 'A' SU(m), 'C' Sp(m), 'B' SO(m), 'G' G2, 'S' Spin
  auto simple = [&](char c, int n) {
    if ((c == 'A' && n == 2) || (c == 'B' && n == 3)) return a.push_back({'C', 1});
    if (c == 'B' && n == 4) {
      a.push_back({'C', 1});
      a.push_back({'C', 1});
      return;
    }
    if (c == 'B' && n == 5) return a.push_back({'C', 2});
    if (c == 'B' && n == 6) return a.push_back({'A', 4});
    if (c == 'B' && n == 2) return a.push_back({'T', 1});
    a.push_back({c, n});
  };
  for (const auto& f : g.factors) {
    switch (f.kind) {
      case Kind::SU: simple('A', f.n); break;
      case Kind::SO:
      case Kind::Spin: simple('B', f.n); break;
      case Kind::Sp: simple('C', f.n); break;
      case Kind::G2: a.push_back({'G', 2}); break;
      case Kind::T:
        for (int i = 0; i < f.n; ++i) a.push_back({'T', 1});
        break;
      case Kind::U:
        a.push_back({'T', 1});
        if (f.n >= 2) simple('A', f.n);
        break;
      case Kind::SUc:
        for (std::size_t i = 0; i + 1 < f.comps.size(); ++i) a.push_back({'T', 1});
        for (int c : f.comps)
          if (c >= 2) simple('A', c);
        break;
    }
  }
  return a;
}

// Two-factor groups occurring as transitive groups or isotropy groups of sphere actions:
// U(m), Sp(m)Sp(1), Sp(m)U(1).
inline bool sphere_pair(std::pair<char, int> x, std::pair<char, int> y) {
  if (y.first == 'T') std::swap(x, y);
  if (x.first == 'T') return y.first == 'A' || y.first == 'C';
  if (x.first == 'C' && x.second == 1 && y.first == 'C') return true;
  if (y.first == 'C' && y.second == 1 && x.first == 'C') return true;
  return false;
}

}  // namespace detail

// A four-factor group must split as (transitive pair) x (isotropy pair).
inline bool four_factor_split_ok(const GroupExpr& g) {
  auto a = detail::atoms(g);
  if (a.size() != 4) return a.size() < 4;
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairings)
    if (detail::sphere_pair(a[p[0]], a[p[1]]) && detail::sphere_pair(a[p[2]], a[p[3]])) return true;
  return false;
}

}  // namespace cohom
