#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cohom {

enum class Kind { SU, SO, Spin, Sp, U, SUc, G2, T };
enum class Family { SU, SO, Spin, Sp };
enum class EmbKind { Abstract, Block, Circle, Named };

struct Ambient {
  Family family = Family::SU;
  int n = 0;
  bool operator==(const Ambient&) const = default;
};

struct Embedding {
  EmbKind kind = EmbKind::Abstract;
  int lo = 0, hi = 0;             // Block, 1-based inclusive
  std::vector<long long> w;       // Circle
  char field = 0;                 // Circle: 0 (unspecified), 'R', 'C', 'H'
  std::string tag;                // Named
  std::vector<int> perm;          // Named: signed coordinate list
  bool operator==(const Embedding&) const = default;
};

struct Factor {
  Kind kind = Kind::SU;
  int n = 0;                      // matrix size, or torus rank for T
  std::vector<int> comps;         // SUc only
  Embedding emb;
  bool operator==(const Factor&) const = default;
};

struct GroupExpr {
  std::vector<Factor> factors;
  int components = 1;
  std::optional<Ambient> ambient;
  bool operator==(const GroupExpr&) const = default;
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off) : std::runtime_error(msg), offset(off) {}
};

// Infinite centers are reported as std::nullopt.
using CenterOrder = std::optional<long long>;

inline const char* family_symbol(Family f) {
  switch (f) {
    case Family::SU: return "SU";
    case Family::SO: return "SO";
    case Family::Spin: return "Spin";
    case Family::Sp: return "Sp";
  }
  return "?";
}

inline std::string kind_symbol(Kind k) {
  switch (k) {
    case Kind::SU: return "SU";
    case Kind::SO: return "SO";
    case Kind::Spin: return "Spin";
    case Kind::Sp: return "Sp";
    case Kind::U: return "U";
    case Kind::SUc: return "SU{}";
    case Kind::G2: return "G2";
    case Kind::T: return "T";
  }
  return "?";
}

// Number of coordinates of the defining representation.
inline int coord_count(const Ambient& a) { return a.n; }

// Number of torus coordinates: complex coordinates, rotation planes, or quaternionic coordinates.
inline int frame_size(const Ambient& a) {
  return (a.family == Family::SO || a.family == Family::Spin) ? a.n / 2 : a.n;
}

inline bool orthogonal(const Ambient& a) { return a.family == Family::SO || a.family == Family::Spin; }

inline GroupExpr ambient_group(const Ambient& a) {
  GroupExpr g;
  Factor f;
  f.kind = a.family == Family::SU ? Kind::SU
         : a.family == Family::SO ? Kind::SO
         : a.family == Family::Spin ? Kind::Spin : Kind::Sp;
  f.n = a.n;
  g.factors.push_back(f);
  return g;
}

// ---------------------------------------------------------------- invariants

inline int factor_rank(const Factor& f) {
  switch (f.kind) {
    case Kind::SU: return f.n - 1;
    case Kind::SO:
    case Kind::Spin: return f.n / 2;
    case Kind::Sp:
    case Kind::U:
    case Kind::T: return f.n;
    case Kind::SUc: return std::accumulate(f.comps.begin(), f.comps.end(), 0) - 1;
    case Kind::G2: return 2;
  }
  return 0;
}

inline long long factor_dim(const Factor& f) {
  long long n = f.n;
  switch (f.kind) {
    case Kind::SU: return n * n - 1;
    case Kind::SO:
    case Kind::Spin: return n * (n - 1) / 2;
    case Kind::Sp: return n * (2 * n + 1);
    case Kind::U: return n * n;
    case Kind::T: return n;
    case Kind::SUc: {
      long long s = -1;
      for (int c : f.comps) s += 1LL * c * c;
      return s;
    }
    case Kind::G2: return 14;
  }
  return 0;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long factor_weyl(const Factor& f) {
  switch (f.kind) {
    case Kind::SU:
    case Kind::U: return factorial(f.n);
    case Kind::SO:
    case Kind::Spin: {
      int r = f.n / 2;
      if (f.n % 2 == 1) return (1LL << r) * factorial(r);
      return r == 0 ? 1 : (1LL << (r - 1)) * factorial(r);
    }
    case Kind::Sp: return (1LL << f.n) * factorial(f.n);
    case Kind::SUc: {
      long long p = 1;
      for (int c : f.comps) p *= factorial(c);
      return p;
    }
    case Kind::G2: return 12;
    case Kind::T: return 1;
  }
  return 1;
}

inline int factor_factor_count(const Factor& f) {
  switch (f.kind) {
    case Kind::U: return f.n >= 2 ? 2 : 1;
    case Kind::T: return f.n;
    case Kind::SO:
    case Kind::Spin:
      if (f.n == 2) return 1;
      if (f.n == 4) return 2;
      return 1;
    case Kind::SUc: {
      int k = static_cast<int>(f.comps.size());
      int big = 0;
      for (int c : f.comps) big += c >= 2;
      return (k - 1) + big;
    }
    default: return 1;
  }
}

inline int rank(const GroupExpr& g) {
  int r = 0;
  for (const auto& f : g.factors) r += factor_rank(f);
  return r;
}

inline long long dim(const GroupExpr& g) {
  long long d = 0;
  for (const auto& f : g.factors) d += factor_dim(f);
  return d;
}

inline long long weyl_order(const GroupExpr& g) {
  long long w = 1;
  for (const auto& f : g.factors) w *= factor_weyl(f);
  return w;
}

inline int factor_count(const GroupExpr& g) {
  int c = 0;
  for (const auto& f : g.factors) c += factor_factor_count(f);
  return c;
}

inline bool has_torus_part(const Factor& f) {
  return f.kind == Kind::T || f.kind == Kind::U || f.kind == Kind::SUc ||
         ((f.kind == Kind::SO || f.kind == Kind::Spin) && f.n == 2);
}

inline CenterOrder center_order(const GroupExpr& g) {
  for (const auto& f : g.factors)
    if (has_torus_part(f)) return std::nullopt;
  if (g.factors.size() != 1) throw std::invalid_argument("center_order expects a single simple factor");
  const Factor& f = g.factors[0];
  switch (f.kind) {
    case Kind::SU: return f.n;
    case Kind::Sp: return 2;
    case Kind::SO: return f.n % 2 ? 1 : 2;
    case Kind::Spin: return f.n % 2 ? 2 : 4;
    case Kind::G2: return 1;
    default: break;
  }
  throw std::invalid_argument("center_order: unsupported factor");
}

// ---------------------------------------------------------------- low-rank identifications

enum class Iso { No, Yes, Flagged };

inline Iso abstractly_isomorphic(const GroupExpr& a, const GroupExpr& b) {
  bool flagged = false;
  auto canon = [&](const GroupExpr& g) {
    std::vector<std::string> out;
    for (const auto& f : g.factors) {
      int n = f.n;
      switch (f.kind) {
        case Kind::SU:
          out.push_back(n == 2 ? "A1" : "SU" + std::to_string(n));
          break;
        case Kind::Sp:
          out.push_back(n == 1 ? "A1" : "Sp" + std::to_string(n));
          break;
        case Kind::Spin:
          if (n == 3) out.push_back("A1");
          else if (n == 4) { out.push_back("A1"); out.push_back("A1"); }
          else if (n == 5) out.push_back("Sp2");
          else if (n == 6) out.push_back("SU4");
          else out.push_back("Spin" + std::to_string(n));
          break;
        case Kind::SO:
          if (n == 2) out.push_back("T1");
          else if (n == 4) { flagged = true; out.push_back("A1"); out.push_back("A1"); }
          else out.push_back("SO" + std::to_string(n));
          break;
        case Kind::U:
          out.push_back("T1");
          if (n >= 2) out.push_back(n == 2 ? "A1" : "SU" + std::to_string(n));
          break;
        case Kind::T:
          for (int i = 0; i < n; ++i) out.push_back("T1");
          break;
        case Kind::SUc: {
          int k = static_cast<int>(f.comps.size());
          for (int i = 0; i + 1 < k; ++i) out.push_back("T1");
          for (int c : f.comps)
            if (c >= 2) out.push_back(c == 2 ? "A1" : "SU" + std::to_string(c));
          break;
        }
        case Kind::G2: out.push_back("G2"); break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto ca = canon(a), cb = canon(b);
  if (ca != cb || a.components != b.components) return Iso::No;
  return flagged ? Iso::Flagged : Iso::Yes;
}

// ---------------------------------------------------------------- normalization

inline std::vector<long long> sign_normalized(std::vector<long long> w) {
  for (long long x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : w) y = -y;
    break;
  }
  return w;
}

namespace detail {

inline int kind_group(const Factor& f) {
  if (f.kind == Kind::SUc) return 0;
  if (f.kind == Kind::T) return 2;
  return 1;
}

inline auto factor_key(const Factor& f) {
  return std::make_tuple(kind_group(f), kind_symbol(f.kind), -f.n, f.comps, static_cast<int>(f.emb.kind), f.emb.lo,
                         f.emb.w, f.emb.tag, f.emb.perm, f.emb.hi, static_cast<int>(f.emb.field));
}

}  // namespace detail

inline GroupExpr normalize_group(const GroupExpr& g) {
  GroupExpr out = g;
  for (auto& f : out.factors)
    if (f.emb.kind == EmbKind::Circle) f.emb.w = sign_normalized(f.emb.w);
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const Factor& a, const Factor& b) { return detail::factor_key(a) < detail::factor_key(b); });
  std::vector<Factor> merged;
  for (const auto& f : out.factors) {
    if (f.kind == Kind::T && f.emb.kind == EmbKind::Abstract && !merged.empty() && merged.back().kind == Kind::T &&
        merged.back().emb.kind == EmbKind::Abstract) {
      merged.back().n += f.n;
      continue;
    }
    merged.push_back(f);
  }
  out.factors = merged;
  return out;
}

// ---------------------------------------------------------------- formatting

inline std::string format_factor(const Factor& f) {
  std::string s;
  switch (f.kind) {
    case Kind::SUc: {
      s = "SU{";
      for (std::size_t i = 0; i < f.comps.size(); ++i) s += (i ? "," : "") + std::to_string(f.comps[i]);
      s += "}";
      break;
    }
    case Kind::G2: s = "G2"; break;
    case Kind::T: s = f.n == 1 ? "S1" : "T" + std::to_string(f.n); break;
    default: s = kind_symbol(f.kind) + "(" + std::to_string(f.n) + ")"; break;
  }
  const Embedding& e = f.emb;
  switch (e.kind) {
    case EmbKind::Abstract: break;
    case EmbKind::Block: s += "@[" + std::to_string(e.lo) + ".." + std::to_string(e.hi) + "]"; break;
    case EmbKind::Circle: {
      s += "w(";
      for (std::size_t i = 0; i < e.w.size(); ++i) s += (i ? "," : "") + std::to_string(e.w[i]);
      s += ")";
      if (e.field) s += std::string(":") + e.field;
      break;
    }
    case EmbKind::Named: {
      s += "#" + e.tag;
      if (!e.perm.empty()) {
        s += "(";
        for (std::size_t i = 0; i < e.perm.size(); ++i) s += (i ? "," : "") + std::to_string(e.perm[i]);
        s += ")";
      }
      break;
    }
  }
  return s;
}

inline std::string format_ambient(const Ambient& a) {
  return std::string(family_symbol(a.family)) + "(" + std::to_string(a.n) + ")";
}

inline std::string format_group(const GroupExpr& raw) {
  const GroupExpr g = normalize_group(raw);
  std::string s;
  if (g.components > 1) s += "Z" + std::to_string(g.components) + ".";
  for (std::size_t i = 0; i < g.factors.size(); ++i) s += (i ? "x" : "") + format_factor(g.factors[i]);
  if (g.factors.empty()) s += "1";
  if (g.ambient) s += " in " + format_ambient(*g.ambient);
  return s;
}

// ---------------------------------------------------------------- parsing

namespace detail {

inline const std::vector<std::string>& tags() {
  static const std::vector<std::string> t = {"g2so7", "spin7so8", "irr3in5", "irr3in3c", "dsp1", "du1", "sigma"};
  return t;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr g;
    ws();
    if (peek() == 'Z' && p_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_ + 1]))) {
      ++p_;
      std::size_t at = p_;
      g.components = integer();
      if (g.components < 1) throw ParseError("component order must be positive", at);
      ws();
      expect('.');
    }
    ws();
    if (peek() == '1' ) {
      ++p_;  // trivial group
    } else {
      g.factors.push_back(term());
      ws();
      while (peek() == 'x') {
        ++p_;
        ws();
        g.factors.push_back(term());
        ws();
      }
    }
    ws();
    if (lit("in")) {
      ws();
      std::size_t at = p_;
      Ambient a;
      if (lit("SU(")) a.family = Family::SU;
      else if (lit("SO(")) a.family = Family::SO;
      else if (lit("Spin(")) a.family = Family::Spin;
      else if (lit("Sp(")) a.family = Family::Sp;
      else throw ParseError("expected ambient group", at);
      a.n = integer();
      expect(')');
      if (a.n < 1) throw ParseError("ambient size must be positive", at);
      g.ambient = a;
    }
    ws();
    if (p_ != s_.size()) throw ParseError("unexpected character", p_);
    check(g);
    return g;
  }

 private:
  const std::string& s_;
  std::size_t p_ = 0;
  std::vector<std::size_t> starts_;

  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  void ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool lit(const std::string& t) {
    if (s_.compare(p_, t.size(), t) == 0) {
      p_ += t.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", p_);
    ++p_;
    ws();
  }
  int integer() {
    ws();
    std::size_t at = p_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", at);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[p_++] - '0');
      if (v > 1000000) throw ParseError("integer too large", at);
    }
    ws();
    return static_cast<int>(v);
  }
  long long signed_integer() {
    ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = s_[p_++] == '-';
    long long v = integer();
    return neg ? -v : v;
  }
  std::vector<long long> signed_list() {
    expect('(');
    std::vector<long long> out{signed_integer()};
    while (peek() == ',') {
      ++p_;
      out.push_back(signed_integer());
    }
    expect(')');
    return out;
  }

  Factor term() {
    Factor f;
    std::size_t at = p_;
    starts_.push_back(at);
    if (lit("SU{")) {
      f.kind = Kind::SUc;
      f.comps.push_back(integer());
      while (peek() == ',') {
        ++p_;
        f.comps.push_back(integer());
      }
      expect('}');
    } else if (lit("SU(")) {
      f.kind = Kind::SU, f.n = integer(), expect(')');
    } else if (lit("SO(")) {
      f.kind = Kind::SO, f.n = integer(), expect(')');
    } else if (lit("Spin(")) {
      f.kind = Kind::Spin, f.n = integer(), expect(')');
    } else if (lit("Sp(")) {
      f.kind = Kind::Sp, f.n = integer(), expect(')');
    } else if (lit("S1")) {
      f.kind = Kind::T, f.n = 1;
    } else if (lit("U(")) {
      f.kind = Kind::U, f.n = integer(), expect(')');
    } else if (lit("G2")) {
      f.kind = Kind::G2, f.n = 2;
    } else if (lit("T")) {
      f.kind = Kind::T, f.n = integer();
    } else {
      throw ParseError("expected group factor", at);
    }
    ws();
    bool bracket = false;
    if (peek() == '[' ) {
      bracket = true;
      ++p_;
      ws();
    }
    if (lit("@[")) {
      if (bracket) throw ParseError("unexpected block inside brackets", p_);
      f.emb.kind = EmbKind::Block;
      f.emb.lo = integer();
      ws();
      if (!lit("..")) throw ParseError("expected '..'", p_);
      f.emb.hi = integer();
      expect(']');
    } else if (lit("w(")) {
      --p_;
      f.emb.kind = EmbKind::Circle;
      f.emb.w = signed_list();
      if (peek() == ':') {
        ++p_;
        ws();
        char c = peek();
        if (c != 'R' && c != 'C' && c != 'H') throw ParseError("expected field R, C or H", p_);
        f.emb.field = c;
        ++p_;
        ws();
      }
    } else if (peek() == '#') {
      if (bracket) throw ParseError("unexpected tag inside brackets", p_);
      ++p_;
      std::size_t tat = p_;
      bool found = false;
      // longest match first
      std::vector<std::string> t = tags();
      std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
      for (const auto& name : t)
        if (lit(name)) {
          f.emb.tag = name;
          found = true;
          break;
        }
      if (!found) throw ParseError("unknown embedding tag", tat);
      ws();
      if (peek() == '(') {
        for (long long v : signed_list()) f.emb.perm.push_back(static_cast<int>(v));
      }
      f.emb.kind = EmbKind::Named;
    } else if (bracket) {
      throw ParseError("expected circle weights", p_);
    }
    if (bracket) expect(']');
    return f;
  }

  void check(const GroupExpr& g) const {
    std::vector<std::pair<int, int>> blocks;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
      const Factor& f = g.factors[i];
      std::size_t at = starts_[i];
      auto fail = [&](const std::string& m) { throw ParseError(m, at); };
      switch (f.kind) {
        case Kind::SU: if (f.n < 2) fail("SU(n) needs n >= 2"); break;
        case Kind::SO: if (f.n < 2) fail("SO(n) needs n >= 2"); break;
        case Kind::Spin: if (f.n < 3) fail("Spin(n) needs n >= 3"); break;
        case Kind::Sp: if (f.n < 1) fail("Sp(n) needs n >= 1"); break;
        case Kind::U: if (f.n < 1) fail("U(n) needs n >= 1"); break;
        case Kind::T: if (f.n < 1) fail("torus rank must be positive"); break;
        case Kind::SUc:
          if (f.comps.size() < 2) fail("composite needs at least two blocks");
          for (int c : f.comps)
            if (c < 1) fail("composite block sizes must be positive");
          break;
        case Kind::G2: break;
      }
      const Embedding& e = f.emb;
      if (e.kind == EmbKind::Block) {
        if (f.kind == Kind::T) fail("torus factors take no block");
        if (e.lo < 1 || e.hi < e.lo) fail("bad block range");
        if (g.ambient && e.hi > coord_count(*g.ambient)) fail("block exceeds ambient");
        for (auto [lo, hi] : blocks)
          if (!(e.hi < lo || hi < e.lo)) fail("overlapping blocks");
        blocks.emplace_back(e.lo, e.hi);
      }
      if (e.kind == EmbKind::Circle) {
        if (!(f.kind == Kind::T && f.n == 1)) fail("weights only apply to S1");
        bool nz = false;
        for (auto x : e.w) nz = nz || x != 0;
        if (!nz) fail("zero weight vector");
        if (g.ambient && static_cast<int>(e.w.size()) != frame_size(*g.ambient))
          fail("weight vector length does not match ambient");
      }
      if (e.kind == EmbKind::Named) {
        const std::string& t = e.tag;
        bool ok = (t == "g2so7" && f.kind == Kind::G2) || (t == "spin7so8" && f.kind == Kind::Spin && f.n == 7) ||
                  (t == "irr3in5" && ((f.kind == Kind::SO && f.n == 3) || (f.kind == Kind::Sp && f.n == 1) ||
                                      (f.kind == Kind::SU && f.n == 2))) ||
                  (t == "irr3in3c" && f.kind == Kind::SO && f.n == 3) ||
                  (t == "dsp1" && ((f.kind == Kind::Sp && f.n == 1) || (f.kind == Kind::SU && f.n == 2))) ||
                  (t == "du1" && f.kind == Kind::T && f.n == 1) || (t == "sigma" && f.kind != Kind::T);
        if (!ok) fail("tag does not apply to this factor");
        for (int x : e.perm) {
          if (x == 0) fail("coordinate 0 in permutation");
          if (g.ambient && std::abs(x) > coord_count(*g.ambient)) fail("permutation exceeds ambient");
        }
        if (t == "sigma" && e.perm.empty()) fail("sigma needs a permutation");
      }
    }
    if (g.ambient) {
      const GroupExpr a = ambient_group(*g.ambient);
      if (rank(g) > rank(a)) throw ParseError("rank exceeds the ambient rank", 0);
      if (dim(g) > dim(a)) throw ParseError("dimension exceeds the ambient dimension", 0);
    }
  }
};

}  // namespace detail

inline GroupExpr parse_group(const std::string& text) { return detail::Parser(text).parse(); }

inline GroupExpr with_ambient(GroupExpr g, const Ambient& a) {
  g.ambient = a;
  return g;
}

}  // namespace cohom
