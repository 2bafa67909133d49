#pragma once

// Expansion of a GroupExpr into simple blocks and torus generators written in the
// torus frame of its ambient group.

#include "groups.hpp"
#include "lattice.hpp"

#include <set>
#include <sstream>

namespace cohom {

using lattice::Vec;

struct Block {
  Kind kind = Kind::SU;  // SU, SO, Sp, G2, Spin
  int n = 0;
  std::string tag;
  std::vector<int> coords;   // sorted coordinates of the defining representation
  std::vector<int> support;  // sorted torus-frame indices (0-based)
  std::vector<Vec> cartan;
  bool aligned = true;
  std::string key;
};

struct Structure {
  Ambient ambient;
  int r = 0;
  std::vector<Block> blocks;
  std::vector<Vec> torus;
  int components = 1;
  bool ok = true;
  std::string error;

  std::vector<Vec> cartan_all() const {
    std::vector<Vec> out = torus;
    for (const auto& b : blocks) out.insert(out.end(), b.cartan.begin(), b.cartan.end());
    return out;
  }
};

inline std::string rref_key(const std::vector<Vec>& rows, int r) {
  using lattice::Q;
  std::vector<lattice::QVec> m;
  for (const auto& v : rows) m.push_back(lattice::to_q(v));
  int rk = 0;
  for (int c = 0; c < r && rk < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = rk; i < static_cast<int>(m.size()); ++i)
      if (m[i][c].numerator() != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    Q lead = m[rk][c];
    for (auto& x : m[rk]) x /= lead;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rk || m[i][c].numerator() == 0) continue;
      Q f = m[i][c];
      for (int k = 0; k < r; ++k) m[i][k] -= f * m[rk][k];
    }
    ++rk;
  }
  std::ostringstream os;
  for (int i = 0; i < rk; ++i) {
    os << "[";
    for (int k = 0; k < r; ++k) os << (k ? "," : "") << m[i][k].numerator() << "/" << m[i][k].denominator();
    os << "]";
  }
  return os.str();
}

namespace detail {

// Length of the defining-representation block a factor occupies in a given ambient family.
inline int block_length(const Factor& f, Family fam) {
  bool orth = fam == Family::SO || fam == Family::Spin;
  int comp = std::accumulate(f.comps.begin(), f.comps.end(), 0);
  switch (f.kind) {
    case Kind::SU:
    case Kind::U: return orth ? 2 * f.n : f.n;
    case Kind::SUc: return orth ? 2 * comp : comp;
    case Kind::SO:
    case Kind::Spin: return f.n;
    case Kind::Sp: return orth ? 4 * f.n : (fam == Family::SU ? 2 * f.n : f.n);
    case Kind::G2: return 7;
    case Kind::T: return orth ? 2 * f.n : f.n;
  }
  return 0;
}

inline int named_length(const Factor& f, Family fam) {
  const std::string& t = f.emb.tag;
  if (t == "g2so7") return 7;
  if (t == "spin7so8") return 8;
  if (t == "irr3in5") return (fam == Family::Sp) ? 2 : 5;
  if (t == "irr3in3c") return 3;
  if (t == "dsp1" || t == "du1") return 2;
  return block_length(f, fam);
}

struct Unit {
  int index;  // frame index
  int sign;
};

class Expander {
 public:
  Expander(const GroupExpr& g, const Ambient& amb) : g_(g), amb_(amb) {
    s_.ambient = amb;
    s_.r = frame_size(amb);
    s_.components = g.components;
    orth_ = orthogonal(amb);
  }

  Structure run() {
    std::set<int> used;
    std::vector<std::vector<std::pair<int, int>>> placed(g_.factors.size());
    for (std::size_t i = 0; i < g_.factors.size(); ++i) {
      const Factor& f = g_.factors[i];
      const Embedding& e = f.emb;
      if (e.kind == EmbKind::Block) {
        for (int c = e.lo; c <= e.hi; ++c) placed[i].push_back({c, 1}), used.insert(c);
      } else if (e.kind == EmbKind::Named) {
        int len = named_length(f, amb_.family);
        if (e.perm.empty()) {
          for (int c = 1; c <= len; ++c) placed[i].push_back({c, 1});
        } else {
          if (static_cast<int>(e.perm.size()) < len) return fail("permutation shorter than embedding");
          for (int k = 0; k < len; ++k) placed[i].push_back({std::abs(e.perm[k]), e.perm[k] < 0 ? -1 : 1});
        }
        for (auto [c, s] : placed[i]) used.insert(c);
      }
    }
    int next = 1;
    for (std::size_t i = 0; i < g_.factors.size(); ++i) {
      const Factor& f = g_.factors[i];
      if (f.emb.kind != EmbKind::Abstract) continue;
      if (f.kind == Kind::T) continue;
      int len = block_length(f, amb_.family);
      if (f.kind == Kind::G2) len = 7;
      if (f.kind == Kind::Spin && f.n == 7 && orth_ && amb_.n >= 8) len = 8;
      while (true) {
        bool free = true;
        for (int c = next; c < next + len; ++c) free = free && !used.count(c);
        if (free) break;
        ++next;
      }
      for (int c = next; c < next + len; ++c) placed[i].push_back({c, 1}), used.insert(c);
      next += len;
    }
    for (auto c : used)
      if (c > coord_count(amb_)) return fail("coordinates exceed ambient");
    for (std::size_t i = 0; i < g_.factors.size(); ++i)
      if (!expand(g_.factors[i], placed[i])) return s_;
    for (auto& b : s_.blocks) finish(b);
    return s_;
  }

 private:
  const GroupExpr& g_;
  Ambient amb_;
  Structure s_;
  bool orth_ = false;

  Structure fail(const std::string& m) {
    s_.ok = false;
    s_.error = m;
    return s_;
  }
  bool bad(const std::string& m) {
    s_.ok = false;
    s_.error = m;
    return false;
  }

  Vec zero() const { return Vec(s_.r, 0); }

  // Complex units of a coordinate list: planes in orthogonal ambients, coordinates otherwise.
  bool units(const std::vector<std::pair<int, int>>& cs, std::vector<Unit>& out) {
    out.clear();
    if (!orth_) {
      for (auto [c, s] : cs) out.push_back({c - 1, s});
      return true;
    }
    if (cs.size() % 2) return bad("complex block needs an even number of real coordinates");
    for (std::size_t k = 0; k < cs.size(); k += 2) {
      int a = cs[k].first, b = cs[k + 1].first;
      int p = (std::min(a, b) - 1) / 2;
      if (std::min(a, b) != 2 * p + 1 || std::max(a, b) != 2 * p + 2) return bad("complex block not aligned with rotation planes");
      int sign = cs[k].second * cs[k + 1].second * (a < b ? 1 : -1);
      out.push_back({p, sign});
    }
    return true;
  }

  void add_su(Block& b, const std::vector<Unit>& u) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      Vec v = zero();
      v[u[i].index] += u[i].sign;
      v[u[i + 1].index] -= u[i + 1].sign;
      b.cartan.push_back(v);
    }
  }

  Vec center(const std::vector<Unit>& u) const {
    Vec v = zero();
    for (auto x : u) v[x.index] += x.sign;
    return v;
  }

  static std::vector<int> raw(const std::vector<std::pair<int, int>>& cs) {
    std::vector<int> out;
    for (auto [c, s] : cs) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool expand(const Factor& f, const std::vector<std::pair<int, int>>& cs) {
    const std::string tag = f.emb.kind == EmbKind::Named ? f.emb.tag : "";
    if (f.kind == Kind::T) {
      if (f.emb.kind == EmbKind::Circle) {
        if (static_cast<int>(f.emb.w.size()) != s_.r) return bad("weight length mismatch");
        s_.torus.push_back(f.emb.w);
        return true;
      }
      if (tag == "du1") {
        std::vector<Unit> u;
        if (!units(cs, u)) return false;
        s_.torus.push_back(center(u));
        return true;
      }
      return bad("torus factor without embedding inside an ambient group");
    }
    int len = cs.size();
    if (tag.empty() || tag == "sigma") {
      if (len != block_length(f, amb_.family)) return bad("block length does not match factor " + format_factor(f));
    }
    Block b;
    b.kind = f.kind;
    b.n = f.n;
    b.tag = (tag == "sigma") ? "" : tag;
    b.coords = raw(cs);
    std::vector<Unit> u;
    if (tag == "g2so7" || tag == "spin7so8") {
      if (!orth_) return bad("exceptional embedding needs an orthogonal ambient");
      std::vector<std::pair<int, int>> planes(cs.begin(), cs.begin() + (tag == "g2so7" ? 6 : 8));
      if (!units(planes, u)) return false;
      add_su(b, u);
      b.kind = tag == "g2so7" ? Kind::G2 : Kind::Spin;
      b.n = tag == "g2so7" ? 2 : 7;
      s_.blocks.push_back(b);
      return true;
    }
    if (tag == "irr3in5") {
      b.kind = orth_ ? Kind::SO : Kind::Sp;
      b.n = orth_ ? 3 : 1;
      Vec v = zero();
      if (orth_) {
        std::vector<std::pair<int, int>> planes(cs.begin(), cs.begin() + 4);
        if (!units(planes, u)) return false;
        v[u[0].index] += u[0].sign;
        v[u[1].index] += 2 * u[1].sign;
      } else {
        if (!units(cs, u)) return false;
        v[u[0].index] += u[0].sign;
        v[u[1].index] += 3 * u[1].sign;
      }
      b.cartan.push_back(v);
      s_.blocks.push_back(b);
      return true;
    }
    if (tag == "dsp1") {
      if (amb_.family != Family::Sp) return bad("diagonal Sp(1) needs a symplectic ambient");
      units(cs, u);
      b.kind = Kind::Sp;
      b.n = 1;
      b.cartan.push_back(center(u));
      s_.blocks.push_back(b);
      return true;
    }
    switch (f.kind) {
      case Kind::SU:
      case Kind::U: {
        if (!units(cs, u)) return false;
        b.kind = Kind::SU;
        add_su(b, u);
        if (f.n >= 2) s_.blocks.push_back(b);
        if (f.kind == Kind::U) s_.torus.push_back(center(u));
        return true;
      }
      case Kind::SUc: {
        if (!units(cs, u)) return false;
        std::size_t at = 0;
        std::vector<std::vector<Unit>> segs;
        for (int c : f.comps) {
          segs.emplace_back(u.begin() + at, u.begin() + at + c);
          at += c;
        }
        std::size_t cat = 0;
        for (std::size_t j = 0; j < segs.size(); ++j) {
          std::size_t width = orth_ ? 2 * segs[j].size() : segs[j].size();
          if (segs[j].size() >= 2) {
            Block sb;
            sb.kind = Kind::SU;
            sb.n = static_cast<int>(segs[j].size());
            std::vector<std::pair<int, int>> sub(cs.begin() + cat, cs.begin() + cat + width);
            sb.coords = raw(sub);
            add_su(sb, segs[j]);
            s_.blocks.push_back(sb);
          }
          cat += width;
          if (j + 1 < segs.size()) {
            Vec a = center(segs[j]), c = center(segs[j + 1]);
            long long na = segs[j].size(), nc = segs[j + 1].size();
            Vec v = zero();
            for (int k = 0; k < s_.r; ++k) v[k] = nc * a[k] - na * c[k];
            s_.torus.push_back(lattice::primitive(v));
          }
        }
        return true;
      }
      case Kind::SO:
      case Kind::Spin: {
        if (orth_) {
          std::set<int> in(b.coords.begin(), b.coords.end());
          int planes = 0;
          for (int p = 0; p < s_.r; ++p) {
            if (in.count(2 * p + 1) && in.count(2 * p + 2)) {
              Vec v = zero();
              v[p] = 1;
              b.cartan.push_back(v);
              ++planes;
            }
          }
          b.kind = Kind::SO;
          b.aligned = planes == f.n / 2;
          if (f.n == 2) {
            if (!b.aligned) return bad("SO(2) block not aligned with a rotation plane");
            s_.torus.push_back(b.cartan[0]);
            return true;
          }
          s_.blocks.push_back(b);
          return true;
        }
        // real orthogonal group inside a complex or quaternionic ambient
        std::vector<Unit> uu;
        units(cs, uu);
        b.kind = Kind::SO;
        for (std::size_t k = 0; k + 1 < uu.size(); k += 2) {
          Vec v = zero();
          v[uu[k].index] += uu[k].sign;
          v[uu[k + 1].index] -= uu[k + 1].sign;
          b.cartan.push_back(v);
        }
        if (f.n == 2) {
          s_.torus.push_back(b.cartan[0]);
          return true;
        }
        s_.blocks.push_back(b);
        return true;
      }
      case Kind::Sp: {
        if (amb_.family != Family::Sp) return bad("Sp block needs a symplectic ambient");
        units(cs, u);
        for (auto x : u) {
          Vec v = zero();
          v[x.index] = 1;
          b.cartan.push_back(v);
        }
        s_.blocks.push_back(b);
        return true;
      }
      case Kind::G2: {
        if (!orth_) return bad("G2 needs an orthogonal ambient");
        std::vector<std::pair<int, int>> planes(cs.begin(), cs.begin() + 6);
        if (!units(planes, u)) return false;
        add_su(b, u);
        b.tag = "g2so7";
        s_.blocks.push_back(b);
        return true;
      }
      default: break;
    }
    return bad("unsupported factor");
  }

  void finish(Block& b) {
    std::set<int> sup;
    for (const auto& v : b.cartan)
      for (int k = 0; k < s_.r; ++k)
        if (v[k]) sup.insert(k);
    if (orth_) {
      for (int c : b.coords) {
        int p = (c - 1) / 2;
        if (p < s_.r && std::binary_search(b.coords.begin(), b.coords.end(), (c % 2) ? c + 1 : c - 1)) sup.insert(p);
      }
    } else {
      for (int c : b.coords) sup.insert(c - 1);
    }
    b.support.assign(sup.begin(), sup.end());
    std::ostringstream os;
    os << kind_symbol(b.kind) << b.n << ":" << b.tag << ":";
    for (int c : b.coords) os << c << ",";
    os << ":" << rref_key(b.cartan, s_.r);
    b.key = os.str();
  }
};

// Synthetic ambient for groups given without one: each factor gets fresh coordinates.
inline Ambient synthetic_ambient(const GroupExpr& g) {
  Family fam = Family::SU;
  for (const auto& f : g.factors) {
    if (f.kind == Kind::SO || f.kind == Kind::Spin || f.kind == Kind::G2) { fam = Family::SO; break; }
    if (f.kind == Kind::Sp) { fam = Family::Sp; break; }
    if (f.emb.kind == EmbKind::Named && f.emb.tag == "dsp1") { fam = Family::Sp; break; }
  }
  int total = 0;
  for (const auto& f : g.factors) {
    if (f.emb.kind == EmbKind::Circle) return {fam, fam == Family::SO ? 2 * static_cast<int>(f.emb.w.size()) + 1
                                                                      : static_cast<int>(f.emb.w.size())};
    total += f.emb.kind == EmbKind::Named ? named_length(f, fam) : block_length(f, fam);
  }
  if (fam == Family::SO) total += 1;
  return {fam, std::max(total, 1)};
}

}  // namespace detail

inline Structure expand(const GroupExpr& g, const std::optional<Ambient>& amb = std::nullopt) {
  Ambient a = amb ? *amb : (g.ambient ? *g.ambient : detail::synthetic_ambient(g));
  if (!g.ambient && !amb) {
    // abstract tori get their own coordinates in the synthetic frame
    GroupExpr h = g;
    std::vector<Factor> fs;
    int extra = 0;
    for (const auto& f : h.factors) {
      if (f.kind == Kind::T && f.emb.kind == EmbKind::Abstract) extra += f.n;
      else fs.push_back(f);
    }
    if (extra) {
      int base = frame_size(a);
      a.n += orthogonal(a) ? 2 * extra : extra;
      int r = frame_size(a);
      h.factors = fs;
      Structure s = detail::Expander(h, a).run();
      for (int k = 0; k < extra; ++k) {
        Vec v(r, 0);
        v[base + k] = 1;
        s.torus.push_back(v);
      }
      for (auto& t : s.torus) t.resize(r, 0);
      return s;
    }
  }
  return detail::Expander(g, a).run();
}

}  // namespace cohom
