#pragma once

#include "groups.hpp"
#include "lattice.hpp"
#include "structure.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cohom {

// ---------------------------------------------------------------- pattern table

struct SpherePattern {
  std::string acting;      // template in the group grammar, parameter k
  std::string isotropy;
  std::string sphere_dim;  // expression in k
  int isotropy_kernel_factors = 0;
  std::string label;       // isotropy representation, informational
};

inline const std::vector<SpherePattern>& sphere_patterns() {
  static const std::vector<SpherePattern> t = {
      {"SO(k+1)", "SO(k)", "k", 0, "rho_k"},
      {"SU(k+1)", "SU(k)", "2k+1", 0, "mu_k + id"},
      {"U(k+1)", "U(k)", "2k+1", 0, "mu_k + id"},
      {"Sp(k+1)", "Sp(k)", "4k+3", 0, "nu_k + 3id"},
      {"Sp(k+1)xSp(1)", "Sp(k)xSp(1)", "4k+3", 1, "nu_k x nu_1 + 3id"},
      {"Sp(k+1)xU(1)", "Sp(k)xU(1)", "4k+3", 1, "nu_k x mu_1 + 3id"},
      {"Spin(9)", "Spin(7)", "15", 0, "Delta_7 + id"},
      {"Spin(7)", "G2", "7", 0, "phi_7"},
      {"G2", "SU(3)", "6", 0, "mu_3"},
      {"S1", "1", "1", 0, "trivial"},
  };
  return t;
}

struct PairInstance {
  std::string acting;
  std::string isotropy;
  int m = 0;
  bool operator==(const PairInstance&) const = default;
};

namespace detail {
inline std::string sym(const char* s, int k) { return std::string(s) + "(" + std::to_string(k) + ")"; }
inline std::string sp_or_trivial(int k) { return k == 0 ? "1" : sym("Sp", k); }
}  // namespace detail

inline std::vector<PairInstance> transitive_pairs_on_sphere(int m) {
  using detail::sym;
  std::vector<PairInstance> out;
  if (m < 1) return out;
  if (m == 1) {
    out.push_back({"S1", "1", 1});
    return out;
  }
  out.push_back({sym("SO", m + 1), sym("SO", m), m});
  if (m % 2 == 1) {
    int k = (m - 1) / 2;
    out.push_back({sym("SU", k + 1), k >= 2 ? sym("SU", k) : "1", m});
    out.push_back({sym("U", k + 1), sym("U", k), m});
  }
  if (m % 4 == 3) {
    int k = (m - 3) / 4;
    out.push_back({sym("Sp", k + 1), detail::sp_or_trivial(k), m});
    out.push_back({sym("Sp", k + 1) + "xSp(1)", k ? sym("Sp", k) + "xSp(1)" : "Sp(1)", m});
    out.push_back({sym("Sp", k + 1) + "xU(1)", k ? sym("Sp", k) + "xU(1)" : "U(1)", m});
  }
  if (m == 15) out.push_back({"Spin(9)", "Spin(7)", m});
  if (m == 7) out.push_back({"Spin(7)", "G2", m});
  if (m == 6) out.push_back({"G2", "SU(3)", m});
  return out;
}

// ---------------------------------------------------------------- circle formulas

inline std::vector<long long> sphere_isotropy_circle(int n, long long k) {
  if (n < 2) throw std::invalid_argument("sphere_isotropy_circle needs n >= 2");
  std::vector<long long> w(n, -k);
  w[0] = (k + 1) * (n - 1);
  return w;
}

inline long long pi1_index_circle(long long l, long long k, int n) {
  if (n < 2) throw std::invalid_argument("pi1_index_circle needs n >= 2");
  if (l == 0 && k == 0) throw std::invalid_argument("(l, k) = (0, 0)");
  if (std::gcd(l, k) != 1) throw std::invalid_argument("gcd(l, k) must be 1");
  long long num = l - k * (n - 1);
  if (num == 0) throw std::invalid_argument("isotropy group is not of corank one");
  long long a = std::gcd(l, static_cast<long long>(n - 1));
  return (num < 0 ? -num : num) / a;
}

// ---------------------------------------------------------------- pi_1 surjectivity

inline bool pi1_surjective_in_SO(const GroupExpr& K) {
  if (!K.ambient || !orthogonal(*K.ambient)) throw std::invalid_argument("pi1_surjective_in_SO needs an SO ambient");
  for (const auto& f : K.factors) {
    if (f.emb.kind == EmbKind::Abstract && f.kind == Kind::T) throw std::invalid_argument("abstract embedding");
    if ((f.kind == Kind::SO || f.kind == Kind::Spin) && f.n >= 2 &&
        (f.emb.kind == EmbKind::Block || (f.emb.kind == EmbKind::Named && f.emb.tag == "sigma")))
      return true;
  }
  Structure s = expand(K);
  if (!s.ok) throw std::invalid_argument("pi1_surjective_in_SO: " + s.error);
  for (const auto& v : lattice::saturate(s.cartan_all(), s.r)) {
    long long sum = 0;
    for (auto x : v) sum += x;
    if (sum % 2 != 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------- quotient recognition

enum class QKind { Sphere, Projective, Lens, NotRecognized };

struct QuotientId {
  QKind kind = QKind::NotRecognized;
  int m = 0;            // dimension for Sphere/Projective
  long long index = 0;  // Lens index
  std::string witness;  // matched pattern
  int kernel_factor_count = 0;
  std::string detail;

  bool recognized() const { return kind == QKind::Sphere || kind == QKind::Projective; }
};

inline std::string to_string(const QuotientId& q) {
  switch (q.kind) {
    case QKind::Sphere: return "S^" + std::to_string(q.m);
    case QKind::Projective: return "RP^" + std::to_string(q.m);
    case QKind::Lens: return "Lens(" + std::to_string(q.index) + ")";
    case QKind::NotRecognized: return "not recognized";
  }
  return "?";
}

namespace detail {

struct BaseMatch {
  bool projective = false;
  int m = 0;
  std::string pattern;
};

inline bool is(const Block& b, Kind k, int n, const std::string& tag = "") { return b.kind == k && b.n == n && b.tag == tag; }

inline bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::optional<BaseMatch> match_single(const Block& a, const std::vector<Block>& h, int t) {
  auto S = [](int m, std::string p) { return BaseMatch{false, m, std::move(p)}; };
  auto P = [](int m, std::string p) { return BaseMatch{true, m, std::move(p)}; };
  const bool none = h.empty();
  const bool one = h.size() == 1;
  if (a.kind == Kind::SO && a.tag.empty()) {
    int k = a.n;
    if (one && t == 0 && is(h[0], Kind::SO, k - 1) && subset(h[0].coords, a.coords))
      return S(k - 1, "SO(" + std::to_string(k) + ")/SO(" + std::to_string(k - 1) + ")");
    if (k == 3 && none && t == 1) return S(2, "SO(3)/SO(2)");
    if (k == 3 && none && t == 0) return P(3, "SO(3)/1");
    if (k == 4 && one && is(h[0], Kind::SU, 2) && t == 1) return S(2, "SO(4)/U(2)");
    if (k == 4 && one && is(h[0], Kind::SU, 2) && t == 0) return P(3, "SO(4)/SU(2)");
    if (k == 5 && one && is(h[0], Kind::SU, 2) && t == 0) return P(7, "SO(5)/SU(2)");
    if (k == 6 && one && is(h[0], Kind::SU, 3) && t == 0) return P(7, "SO(6)/SU(3)");
    if (k == 7 && one && h[0].kind == Kind::G2 && t == 0) return P(7, "SO(7)/G2");
    return std::nullopt;
  }
  if (a.kind == Kind::SO && a.n == 3) {
    if (none && t == 1) return S(2, "SO(3)/SO(2)");
    if (none && t == 0) return P(3, "SO(3)/1");
    return std::nullopt;
  }
  if (a.kind == Kind::SU) {
    int k = a.n - 1;
    if (k >= 2 && one && t == 0 && is(h[0], Kind::SU, k)) return S(2 * k + 1, "SU(" + std::to_string(k + 1) + ")/SU(" + std::to_string(k) + ")");
    if (k == 1 && none && t == 0) return S(3, "SU(2)/1");
    if (k == 1 && none && t == 1) return S(2, "SU(2)/S1");
    return std::nullopt;
  }
  if (a.kind == Kind::Sp) {
    int k = a.n - 1;
    if (k >= 1 && a.tag.empty() && one && t == 0 && is(h[0], Kind::Sp, k) && subset(h[0].coords, a.coords))
      return S(4 * k + 3, "Sp(" + std::to_string(k + 1) + ")/Sp(" + std::to_string(k) + ")");
    if (k == 0 && none && t == 0) return S(3, "Sp(1)/1");
    if (k == 0 && none && t == 1) return S(2, "Sp(1)/S1");
    return std::nullopt;
  }
  if (a.kind == Kind::G2) {
    if (one && t == 0 && is(h[0], Kind::SU, 3)) return S(6, "G2/SU(3)");
    return std::nullopt;
  }
  if (a.kind == Kind::Spin && a.n == 7) {
    if (one && t == 0 && h[0].kind == Kind::G2) return S(7, "Spin(7)/G2");
    if (one && t == 0 && is(h[0], Kind::SU, 4)) return S(6, "Spin(7)/SU(4)");
    return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<BaseMatch> match_pair(const Block& big, const Block& small, const std::vector<Block>& h, int t) {
  if (t != 0 || !is(small, Kind::Sp, 1) || big.kind != Kind::Sp || !big.tag.empty()) return std::nullopt;
  int k = big.n - 1;
  const Block* diag = nullptr;
  const Block* rest = nullptr;
  for (const auto& b : h) {
    if (is(b, Kind::Sp, 1, "dsp1")) diag = &b;
    else if (is(b, Kind::Sp, k)) rest = &b;
    else return std::nullopt;
  }
  if (!diag || (k >= 1 && !rest) || h.size() != static_cast<std::size_t>(k >= 1 ? 2 : 1)) return std::nullopt;
  if (diag->coords.size() != 2) return std::nullopt;
  int i = small.coords[0];
  int j = diag->coords[0] == i ? diag->coords[1] : (diag->coords[1] == i ? diag->coords[0] : -1);
  if (j < 0 || !std::binary_search(big.coords.begin(), big.coords.end(), j)) return std::nullopt;
  if (rest) {
    std::vector<int> expect;
    for (int c : big.coords)
      if (c != j) expect.push_back(c);
    if (rest->coords != expect) return std::nullopt;
  }
  return BaseMatch{false, 4 * k + 3, "Sp(" + std::to_string(k + 1) + ")Sp(1)/Sp(" + std::to_string(k) + ")DeltaSp(1)"};
}

}  // namespace detail

inline QuotientId classify_quotient(const GroupExpr& K, const GroupExpr& H) {
  QuotientId q;
  long long dd = dim(K) - dim(H);
  if (dd <= 0) {
    q.detail = "dim(H) >= dim(K)";
    return q;
  }
  std::optional<Ambient> amb = K.ambient ? K.ambient : H.ambient;
  if (!amb) amb = detail::synthetic_ambient(K);
  if (K.ambient && H.ambient && !(*K.ambient == *H.ambient)) {
    q.detail = "ambient mismatch";
    return q;
  }
  Structure sk = expand(K, amb), sh = expand(H, amb);
  if (!sk.ok || !sh.ok) {
    q.detail = !sk.ok ? sk.error : sh.error;
    return q;
  }
  const int r = sk.r;
  std::vector<bool> kker(sk.blocks.size(), false), hker(sh.blocks.size(), false);
  for (std::size_t i = 0; i < sk.blocks.size(); ++i)
    for (std::size_t j = 0; j < sh.blocks.size(); ++j)
      if (!hker[j] && sk.blocks[i].key == sh.blocks[j].key) {
        kker[i] = hker[j] = true;
        break;
      }
  std::vector<Block> A, HA;
  std::vector<Vec> CA, CHA;
  for (std::size_t i = 0; i < sk.blocks.size(); ++i) {
    if (kker[i]) {
      ++q.kernel_factor_count;
      continue;
    }
    A.push_back(sk.blocks[i]);
    CA.insert(CA.end(), sk.blocks[i].cartan.begin(), sk.blocks[i].cartan.end());
  }
  for (std::size_t j = 0; j < sh.blocks.size(); ++j) {
    if (hker[j]) continue;
    HA.push_back(sh.blocks[j]);
    CHA.insert(CHA.end(), sh.blocks[j].cartan.begin(), sh.blocks[j].cartan.end());
  }
  const auto VK = sk.cartan_all();
  const auto VH = sh.cartan_all();
  if (!lattice::contains_span(VK, VH)) {
    q.detail = "torus of H is not contained in the torus of K";
    return q;
  }
  if (H.components % K.components != 0) {
    q.detail = "component order of K does not divide that of H";
    return q;
  }
  if (A.empty()) {
    if (HA.empty() && dd == 1 && lattice::rank(VK) - lattice::rank(VH) == 1) {
      q.kind = QKind::Sphere;
      q.m = 1;
      q.witness = "S1/finite";
    } else {
      q.detail = "no active simple factor and quotient is not a circle";
    }
    return q;
  }
  if (lattice::rank(lattice::concat(VH, CA)) != lattice::rank(VK)) {
    q.detail = "H does not surject onto K modulo its active factors";
    return q;
  }
  int t = lattice::intersection_dim(VH, CA) - lattice::rank(CHA);
  auto D = lattice::integer_kernel(CA, r);
  std::vector<Vec> gens;
  for (const auto& v : lattice::saturate(VH, r)) gens.push_back(lattice::mat_vec(D, v));
  long long d = D.empty() ? 1 : lattice::index_in_saturation(gens, static_cast<int>(D.size()));
  d *= H.components / K.components;

  std::optional<detail::BaseMatch> base;
  if (A.size() == 1) base = detail::match_single(A[0], HA, t);
  if (A.size() == 2) {
    base = detail::match_pair(A[0], A[1], HA, t);
    if (!base) base = detail::match_pair(A[1], A[0], HA, t);
  }
  if (!base) {
    q.detail = "no sphere pattern matches the active factors";
    return q;
  }
  if (base->m != dd) {
    q.detail = "matched pattern dimension " + std::to_string(base->m) + " differs from dim(K)-dim(H)";
    return q;
  }
  q.witness = base->pattern;
  if (base->projective) {
    if (d == 1) {
      q.kind = QKind::Projective;
      q.m = base->m;
    } else {
      q.detail = "finite quotient of a projective space";
    }
    return q;
  }
  if (d == 1) {
    q.kind = QKind::Sphere;
    q.m = base->m;
  } else if (d == 2) {
    q.kind = QKind::Projective;
    q.m = base->m;
  } else if (base->m % 2 == 1) {
    q.kind = QKind::Lens;
    q.index = d;
  } else {
    q.detail = "finite quotient of an even sphere";
  }
  return q;
}

}  // namespace cohom
