#pragma once

#include "borel_siebenthal.hpp"
#include "groups.hpp"
#include "homogeneous.hpp"
#include "spheres.hpp"
#include "structure.hpp"

#include <set>
#include <string>
#include <vector>

namespace cohom {

struct SphereWitness {
  QuotientId quotient;
  long long l = 0;
  int kernel_factor_count = 0;
};

struct Diagram {
  GroupExpr G;  // the ambient group as a single abstract factor
  GroupExpr Kminus, Kplus, H;
  SphereWitness wminus, wplus;
};

struct Check {
  std::string check;
  bool pass = false;
  std::string detail;
};

using Report = std::vector<Check>;

inline bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

inline SphereWitness make_witness(const GroupExpr& K, const GroupExpr& H) {
  SphereWitness w;
  w.quotient = classify_quotient(K, H);
  w.l = dim(K) - dim(H);
  w.kernel_factor_count = w.quotient.kernel_factor_count;
  return w;
}

inline Ambient diagram_ambient(const Diagram& d) { return simple_ambient(d.G); }

inline Diagram make_diagram(const GroupExpr& G, GroupExpr Km, GroupExpr Kp, GroupExpr H) {
  Ambient a = simple_ambient(G);
  for (auto* x : {&Km, &Kp, &H})
    if (!x->ambient) x->ambient = a;
  Diagram d{G, Km, Kp, H, {}, {}};
  d.wminus = make_witness(Km, H);
  d.wplus = make_witness(Kp, H);
  return d;
}

// ---------------------------------------------------------------- text form

namespace detail {

inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

// "H < Kminus , Kplus < G"
inline Diagram parse_diagram(const std::string& text) {
  auto lt = detail::split_top(text, '<');
  if (lt.size() != 3) throw ParseError("diagram must have the form 'H < Kminus , Kplus < G'", 0);
  auto ks = detail::split_top(lt[1], ',');
  if (ks.size() != 2) throw ParseError("expected 'Kminus , Kplus' between the '<' signs", lt[0].size() + 1);
  const std::size_t off_k = lt[0].size() + 1, off_g = off_k + lt[1].size() + 1;
  auto parse_at = [](const std::string& s, std::size_t off) {
    try {
      return parse_group(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), e.offset + off);
    }
  };
  GroupExpr G = parse_at(lt[2], off_g);
  GroupExpr H = parse_at(lt[0], 0);
  GroupExpr Km = parse_at(ks[0], off_k);
  GroupExpr Kp = parse_at(ks[1], off_k + ks[0].size() + 1);
  Ambient a;
  try {
    a = simple_ambient(G);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), off_g);
  }
  for (auto* x : {&Km, &Kp, &H})
    if (x->ambient && !(*x->ambient == a)) throw ParseError("component ambient differs from G", 0);
  return make_diagram(G, Km, Kp, H);
}

inline std::string strip_ambient(GroupExpr g) {
  g.ambient.reset();
  return format_group(g);
}

inline std::string format_diagram(const Diagram& d) {
  return strip_ambient(d.H) + " < " + strip_ambient(d.Kminus) + " , " + strip_ambient(d.Kplus) + " < " + format_group(d.G);
}

// ---------------------------------------------------------------- invariants

inline long long euler_char_M(const Diagram& d) {
  GroupExpr G = ambient_group(diagram_ambient(d));
  return euler_char(G, d.Kminus) + euler_char(G, d.Kplus) - euler_char(G, d.H);
}

inline long long dim_M(const Diagram& d) {
  long long m = dim(d.G) - dim(d.H) + 1;
  return m;
}

// ---------------------------------------------------------------- validation

namespace detail {

inline std::set<int> block_coords(const Structure& s) {
  std::set<int> c;
  for (const auto& b : s.blocks) c.insert(b.coords.begin(), b.coords.end());
  return c;
}

inline Check inclusion(const std::string& name, const Structure& h, const Structure& k) {
  Check c{name, true, ""};
  auto kc = block_coords(k);
  for (const auto& b : h.blocks) {
    bool same = false, inside = false;
    for (const auto& kb : k.blocks) {
      if (kb.key == b.key) same = true;
      if (std::includes(kb.coords.begin(), kb.coords.end(), b.coords.begin(), b.coords.end())) inside = true;
    }
    bool covered = std::includes(kc.begin(), kc.end(), b.coords.begin(), b.coords.end());
    if (!same && !inside && !covered) {
      c.pass = false;
      c.detail = "block " + kind_symbol(b.kind) + "(" + std::to_string(b.n) + ") of H is not inside a block of K";
      return c;
    }
  }
  if (!lattice::contains_span(k.cartan_all(), h.cartan_all())) {
    c.pass = false;
    c.detail = "torus of H is not inside the torus of K";
  }
  return c;
}

}  // namespace detail

inline Report validate_diagram(const Diagram& d) {
  Report r;
  Ambient a;
  try {
    a = diagram_ambient(d);
    r.push_back({"ambient", true, format_ambient(a)});
  } catch (const std::exception& e) {
    r.push_back({"ambient", false, e.what()});
    return r;
  }
  bool amb_ok = true;
  for (const auto* x : {&d.H, &d.Kminus, &d.Kplus})
    if (!x->ambient || !(*x->ambient == a)) amb_ok = false;
  r.push_back({"same-ambient", amb_ok, amb_ok ? "" : "component ambient differs from G"});
  Structure sh = expand(d.H, a), sm = expand(d.Kminus, a), sp = expand(d.Kplus, a);
  r.push_back({"embedding-H", sh.ok, sh.error});
  r.push_back({"embedding-Kminus", sm.ok, sm.error});
  r.push_back({"embedding-Kplus", sp.ok, sp.error});
  const long long lm = dim(d.Kminus) - dim(d.H), lp = dim(d.Kplus) - dim(d.H);
  r.push_back({"l-minus-positive", lm >= 1, "l- = " + std::to_string(lm)});
  r.push_back({"l-plus-positive", lp >= 1, "l+ = " + std::to_string(lp)});
  bool ranks = rank(d.H) <= rank(d.Kminus) && rank(d.H) <= rank(d.Kplus) && rank(d.Kminus) <= rank(d.G) &&
               rank(d.Kplus) <= rank(d.G);
  r.push_back({"rank-order", ranks, ""});
  if (sh.ok && sm.ok) r.push_back(detail::inclusion("inclusion-minus", sh, sm));
  if (sh.ok && sp.ok) r.push_back(detail::inclusion("inclusion-plus", sh, sp));
  auto wcheck = [&](const std::string& name, const SphereWitness& w, long long l) {
    bool ok = w.quotient.recognized() && w.l == l;
    std::string det = to_string(w.quotient);
    if (!w.quotient.witness.empty()) det += " via " + w.quotient.witness;
    if (!w.quotient.detail.empty()) det += " (" + w.quotient.detail + ")";
    r.push_back({name, ok, det});
  };
  wcheck("witness-minus", d.wminus, lm);
  wcheck("witness-plus", d.wplus, lp);
  return r;
}

// ---------------------------------------------------------------- necessary filters

namespace detail {

inline std::vector<Block> kernel_blocks(const Structure& k, const Structure& h) {
  std::vector<Block> out;
  std::vector<bool> used(h.blocks.size(), false);
  for (const auto& b : k.blocks)
    for (std::size_t j = 0; j < h.blocks.size(); ++j)
      if (!used[j] && h.blocks[j].key == b.key) {
        used[j] = true;
        out.push_back(b);
        break;
      }
  return out;
}

// Simple groups occurring as (a factor of) an isotropy group of a transitive sphere action.
inline bool isotropy_kind(const Block& b) {
  switch (b.kind) {
    case Kind::SO:
    case Kind::SU:
    case Kind::Sp:
    case Kind::G2: return true;
    case Kind::Spin: return b.n == 7;
    default: return false;
  }
}

}  // namespace detail

inline Report necessary_filters(const Diagram& d) {
  Report r;
  const Ambient a = diagram_ambient(d);
  const GroupExpr G = ambient_group(a);
  const int rg = rank(G);
  long long chi = 0;
  try {
    chi = euler_char_M(d);
  } catch (const std::exception& e) {
    r.push_back({"F1", false, e.what()});
    return r;
  }
  const long long lm = d.wminus.l, lp = d.wplus.l;
  const bool full_p = rank(d.Kplus) == rg;

  bool f1 = chi <= 0 || std::max(rank(d.Kminus), rank(d.Kplus)) == rg;
  r.push_back({"F1", f1, "chi(M) = " + std::to_string(chi)});

  bool f2 = true;
  std::string f2d;
  if (full_p && chi > 0) {
    int cr = rg - rank(d.H);
    f2 = cr == 1 && lp % 2 == 1;
    f2d = "corank(G,H) = " + std::to_string(cr) + ", l+ = " + std::to_string(lp);
  }
  r.push_back({"F2", f2, f2d});

  bool f3 = true;
  std::string f3d;
  if (lp > 1 && lm >= 1 && d.Kminus.components != 1) f3 = false, f3d = "K- must be connected";
  if (lm > 1 && lp >= 1 && d.Kplus.components != 1) f3 = false, f3d = "K+ must be connected";
  if (lm > 1 && lp > 1 && (d.H.components != 1 || d.Kminus.components != 1 || d.Kplus.components != 1))
    f3 = false, f3d = "H, K-, K+ must be connected";
  r.push_back({"F3", f3, f3d});

  int fc = factor_count(d.Kplus);
  r.push_back({"F4", fc <= 4, "factor_count(K+) = " + std::to_string(fc)});

  bool f5 = true;
  std::string f5d;
  Structure sh = expand(d.H, a), sm = expand(d.Kminus, a), sp = expand(d.Kplus, a);
  if (sh.ok && sm.ok && sp.ok) {
    auto kp = detail::kernel_blocks(sp, sh);
    auto km = detail::kernel_blocks(sm, sh);
    for (const auto& b : kp) {
      if (!detail::isotropy_kind(b)) {
        f5 = false;
        f5d = kind_symbol(b.kind) + "(" + std::to_string(b.n) + ") in the kernel is not an isotropy factor";
      }
      for (const auto& c : km)
        if (c.key == b.key) {
          f5 = false;
          f5d = kind_symbol(b.kind) + "(" + std::to_string(b.n) + ") acts trivially on both spheres";
        }
    }
  }
  if (fc == 4 && !four_factor_split_ok(d.Kplus)) {
    f5 = false;
    f5d = "four factors without a transitive/isotropy split";
  }
  r.push_back({"F5", f5, f5d});
  return r;
}

// ---------------------------------------------------------------- normalization

inline std::string diagram_key(const Diagram& d) {
  return format_group(d.H) + "|" + format_group(d.Kminus) + "|" + format_group(d.Kplus);
}

inline Diagram normalize_diagram(const Diagram& d) {
  Diagram n = d;
  n.H = normalize_group(d.H);
  n.Kminus = normalize_group(d.Kminus);
  n.Kplus = normalize_group(d.Kplus);
  n.G = normalize_group(d.G);
  const int rg = rank(n.G);
  const bool fm = rank(n.Kminus) == rg, fp = rank(n.Kplus) == rg;
  bool swap = false;
  if (fm != fp) swap = fm;
  else swap = format_group(n.Kplus) < format_group(n.Kminus);
  if (swap) {
    std::swap(n.Kminus, n.Kplus);
    std::swap(n.wminus, n.wplus);
  }
  return n;
}

// ---------------------------------------------------------------- action kernel

struct KernelOrder {
  bool known = false;
  long long order = 0;
  std::string detail;
};

// Central elements of G lying in H.
inline KernelOrder action_kernel_order(const Diagram& d) {
  const Ambient a = diagram_ambient(d);
  KernelOrder k;
  if (a.family == Family::Spin) {
    k.detail = "center of Spin is not decided at the descriptor level";
    return k;
  }
  Structure s = expand(d.H, a);
  if (!s.ok) {
    k.detail = s.error;
    return k;
  }
  const int r = s.r;
  std::vector<lattice::QVec> centre;
  if (a.family == Family::SU) {
    for (int j = 0; j < a.n; ++j) centre.push_back(lattice::QVec(r, lattice::Q(j, a.n)));
  } else if (a.family == Family::Sp || a.n % 2 == 0) {
    centre.push_back(lattice::QVec(r, lattice::Q(0)));
    centre.push_back(lattice::QVec(r, lattice::Q(1, 2)));
  } else {
    centre.push_back(lattice::QVec(r, lattice::Q(0)));
  }
  const auto basis = s.cartan_all();
  long long count = 0;
  for (const auto& v : centre) {
    if (lattice::in_torus(basis, v)) {
      ++count;
    } else if (d.H.components > 1) {
      k.detail = "membership of a central element in a non-identity component is undecided";
      return k;
    }
  }
  k.known = true;
  k.order = count;
  return k;
}

// ---------------------------------------------------------------- non-primitivity

// A coordinate fixed by both K- and K+ puts them inside a proper stabilizer.
inline std::optional<std::string> nonprimitive_witness(const Diagram& d) {
  const Ambient a = diagram_ambient(d);
  if (d.Kminus.components != 1 || d.Kplus.components != 1) return std::nullopt;
  Structure sm = expand(d.Kminus, a), sp = expand(d.Kplus, a);
  if (!sm.ok || !sp.ok) return std::nullopt;
  auto moved = [&](const Structure& s) {
    std::set<int> m = detail::block_coords(s);
    for (const auto& v : s.torus)
      for (int p = 0; p < s.r; ++p)
        if (v[p] != 0) {
          if (orthogonal(a)) {
            m.insert(2 * p + 1);
            m.insert(2 * p + 2);
          } else {
            m.insert(p + 1);
          }
        }
    return m;
  };
  auto mm = moved(sm), mp = moved(sp);
  for (int c = 1; c <= a.n; ++c)
    if (!mm.count(c) && !mp.count(c)) return "coordinate " + std::to_string(c) + " is fixed by K- and K+";
  return std::nullopt;
}

}  // namespace cohom
