#pragma once

#include "diagrams.hpp"
#include "groups.hpp"
#include "homogeneous.hpp"
#include "spheres.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cohom {

// ---------------------------------------------------------------- integer expressions in n

class ChiExpr {
 public:
  ChiExpr() = default;
  explicit ChiExpr(std::string text) : text_(std::move(text)) {
    std::size_t p = 0;
    root_ = parse_sum(p);
    skip(p);
    if (p != text_.size()) throw ParseError("unexpected character in expression '" + text_ + "'", p);
  }

  long long eval(long long n) const { return root_->eval(n); }
  const std::string& text() const { return text_; }

 private:
  struct Node {
    char op = 0;  // 'c' const, 'n' variable, '+', '-', '*', '/', '^', 'u' unary minus
    long long value = 0;
    std::shared_ptr<Node> a, b;

    long long eval(long long n) const {
      switch (op) {
        case 'c': return value;
        case 'n': return n;
        case 'u': return -a->eval(n);
        case '+': return a->eval(n) + b->eval(n);
        case '-': return a->eval(n) - b->eval(n);
        case '*': return a->eval(n) * b->eval(n);
        case '/': {
          long long x = a->eval(n), y = b->eval(n);
          if (y == 0 || x % y != 0) throw std::domain_error("inexact division");
          return x / y;
        }
        case '^': {
          long long x = a->eval(n), y = b->eval(n), r = 1;
          if (y < 0) throw std::domain_error("negative exponent");
          while (y-- > 0) r *= x;
          return r;
        }
      }
      return 0;
    }
  };
  using P = std::shared_ptr<Node>;

  std::string text_;
  P root_;

  void skip(std::size_t& p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
  }
  static P bin(char op, P a, P b) {
    auto x = std::make_shared<Node>();
    x->op = op;
    x->a = std::move(a);
    x->b = std::move(b);
    return x;
  }
  P parse_sum(std::size_t& p) const {
    P l = parse_prod(p);
    while (true) {
      skip(p);
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
        char op = text_[p++];
        l = bin(op, l, parse_prod(p));
      } else {
        return l;
      }
    }
  }
  P parse_prod(std::size_t& p) const {
    P l = parse_unary(p);
    while (true) {
      skip(p);
      if (p < text_.size() && (text_[p] == '*' || text_[p] == '/')) {
        char op = text_[p++];
        l = bin(op, l, parse_unary(p));
      } else {
        return l;
      }
    }
  }
  P parse_unary(std::size_t& p) const {
    skip(p);
    if (p < text_.size() && text_[p] == '-') {
      ++p;
      return bin('u', parse_unary(p), nullptr);
    }
    return parse_pow(p);
  }
  P parse_pow(std::size_t& p) const {
    P base = parse_atom(p);
    skip(p);
    if (p < text_.size() && text_[p] == '^') {
      ++p;
      return bin('^', base, parse_unary(p));
    }
    return base;
  }
  P parse_atom(std::size_t& p) const {
    skip(p);
    if (p >= text_.size()) throw ParseError("unexpected end of expression '" + text_ + "'", p);
    char c = text_[p];
    if (c == '(') {
      ++p;
      P x = parse_sum(p);
      skip(p);
      if (p >= text_.size() || text_[p] != ')') throw ParseError("missing ')' in '" + text_ + "'", p);
      ++p;
      return x;
    }
    if (c == 'n') {
      ++p;
      auto x = std::make_shared<Node>();
      x->op = 'n';
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) v = v * 10 + (text_[p++] - '0');
      auto x = std::make_shared<Node>();
      x->op = 'c';
      x->value = v;
      return x;
    }
    throw ParseError(std::string("unexpected '") + c + "' in expression '" + text_ + "'", p);
  }
};

// ---------------------------------------------------------------- templates
//
// <expr>           integer value
// <rep|V|expr>     ",V" repeated expr times
// <seq|a|b>        ",a,a+1,...,b"
// <x|expr|TEXT>    TEXT when expr > 0, else nothing

inline std::string expand_template(std::string s, long long n) {
  while (true) {
    std::size_t open = s.rfind('<');
    if (open == std::string::npos) return s;
    std::size_t close = s.find('>', open);
    if (close == std::string::npos) throw ParseError("unterminated template in '" + s + "'", open);
    std::string body = s.substr(open + 1, close - open - 1);
    std::string out;
    std::size_t b1 = body.find('|');
    if (b1 == std::string::npos) {
      out = std::to_string(ChiExpr(body).eval(n));
    } else {
      std::string op = body.substr(0, b1);
      std::size_t b2 = body.find('|', b1 + 1);
      if (b2 == std::string::npos) throw ParseError("template needs two arguments: " + body, open);
      std::string a = body.substr(b1 + 1, b2 - b1 - 1), b = body.substr(b2 + 1);
      if (op == "rep") {
        long long k = ChiExpr(b).eval(n);
        for (long long i = 0; i < k; ++i) out += "," + a;
      } else if (op == "seq") {
        long long lo = ChiExpr(a).eval(n), hi = ChiExpr(b).eval(n);
        for (long long i = lo; i <= hi; ++i) out += "," + std::to_string(i);
      } else if (op == "x") {
        if (ChiExpr(a).eval(n) > 0) out = b;
      } else {
        throw ParseError("unknown template operator '" + op + "'", open);
      }
    }
    s = s.substr(0, open) + out + s.substr(close + 1);
  }
}

// ---------------------------------------------------------------- entries

struct CatalogEntry {
  std::string id;
  std::string family;  // SU, SO-odd, SO-even, Spin-odd, Sp
  int n_min = 0, n_max = 0;
  std::string H, Kminus, Kplus;
  std::optional<std::string> printed_chi;
  std::string source;
  bool spin_level = false;
};

inline std::string family_group(const std::string& family, long long n) {
  if (family == "SU") return "SU(" + std::to_string(n) + ")";
  if (family == "SO-odd") return "SO(" + std::to_string(2 * n + 1) + ")";
  if (family == "SO-even") return "SO(" + std::to_string(2 * n) + ")";
  if (family == "Spin-odd") return "Spin(" + std::to_string(2 * n + 1) + ")";
  if (family == "Sp") return "Sp(" + std::to_string(n) + ")";
  throw std::invalid_argument("unknown family " + family);
}

inline const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> f = {"SU", "SO-odd", "Spin-odd", "Sp", "SO-even"};
  return f;
}

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = {
      // SU(3)
      {"SU3-a", "SU", 3, 3, "S1w(1,-1,0)", "SO(3)#irr3in3c", "SU{1,2}", "3", "SU(3) table, row 3", false},
      {"SU3-b", "SU", 3, 3, "S1w(1,-1,0)", "SO(3)#irr3in3c", "SU{1,1,1}", "6", "SU(3) table, row 4", false},
      {"SU3-c", "SU", 3, 3, "Z3.S1w(1,-1,0)", "Z3.SO(3)#irr3in3c", "SU{1,1,1}", "6", "SU(3) table, row 5", false},
      // SU(4)
      {"SU4-a", "SU", 4, 4, "S1w(-2,4,-1,-1)xSU(2)@[3..4]", "SU{2,2}", "SU{1,3}", "10", "SU(4) table, row 1", false},
      {"SU4-b", "SU", 4, 4, "S1w(-2,0,1,1)xSU(2)@[3..4]", "SU{2,2}", "SU{1,3}", std::nullopt, "SU(4) table, row 2", false},
      {"SU4-c", "SU", 4, 4, "S1w(1,-1,0,0)xSU(2)@[3..4]", "SU{1,3}#sigma(2,1,3,4)", "SU{1,3}", "8", "SU(4) table, row 3", false},
      // SU(n), n >= 5
      {"SUn-a", "SU", 5, 10, "S1w(-1,1<rep|0|n-2>)xSU(<n-2>)@[3..<n>]", "SU{1,<n-1>}#sigma(2,1<seq|3|n>)", "SU{1,<n-1>}",
       "2*n", "SU(n) list, sigma row", false},
      {"SUn-b", "SU", 5, 10, "S1w(-<n-2>,<2*(n-2)><rep|-1|n-2>)xSU(<n-2>)@[3..<n>]", "SU{2,<n-2>}", "SU{1,<n-1>}",
       "n*(n+1)/2", "SU(n) list, S(U(2)U(n-2)) row", false},
      // SO(6)
      {"SO6-a", "SO-even", 3, 3, "SO(4)@[3..6]", "SO(5)@[2..6]", "SO(2)@[1..2]xSO(4)@[3..6]", std::nullopt, "SO(6) table, row 1", false},
      {"SO6-b", "SO-even", 3, 3, "Z2.SO(4)@[3..6]", "Z2.SO(5)@[2..6]", "SO(2)@[1..2]xSO(4)@[3..6]", std::nullopt, "SO(6) table, row 2", false},
      {"SO6-c", "SO-even", 3, 3, "SO(2)@[1..2]xSO(3)@[4..6]", "SO(3)@[1..3]xSO(3)@[4..6]", "SO(2)@[1..2]xSO(4)@[3..6]", std::nullopt,
       "SO(6) table, row 3", false},
      {"SO6-d", "SO-even", 3, 3, "SO(2)@[1..2]xSO(2)@[5..6]", "SO(2)@[1..2]xSO(3)@[4..6]", "U(2)@[1..4]xSO(2)@[5..6]", std::nullopt,
       "SO(6) table, row 4", false},
      {"SO6-e", "SO-even", 3, 3, "U(2)@[1..4]", "SO(4)@[1..4]", "U(3)@[1..6]", std::nullopt, "SO(6) table, row 5", false},
      {"SO6-f", "SO-even", 3, 3, "SO(2)@[1..2]xSO(2)@[5..6]", "SO(3)@[1..3]xSO(2)@[5..6]", "SO(2)@[1..2]xU(2)@[3..6]", std::nullopt,
       "SO(6) table, row 6", false},
      // SO(2n+1)
      {"SOodd-a", "SO-odd", 3, 10, "SO(<2*n-1>)@[3..<2*n+1>]", "SO(2)@[1..2]xSO(<2*n-1>)@[3..<2*n+1>]", "SO(<2*n>)@[2..<2*n+1>]",
       std::nullopt, "SO(2n+1) table, row 1", false},
      {"SOodd-b", "SO-odd", 3, 10, "Z2.SO(<2*n-1>)@[3..<2*n+1>]", "SO(2)@[1..2]xSO(<2*n-1>)@[3..<2*n+1>]", "Z2.SO(<2*n>)@[2..<2*n+1>]",
       std::nullopt, "SO(2n+1) table, row 2", false},
      {"SOodd-c", "SO-odd", 3, 3, "SU(3)@[1..6]", "G2#g2so7", "U(3)@[1..6]", "8", "SO(2n+1) table, row 3", false},
      {"SOodd-d", "SO-odd", 4, 4, "S1w(1,0,0,0)xSU(3)@[3..8]", "SO(2)@[1..2]xG2#g2so7(3,4,5,6,7,8,9)", "U(4)@[1..8]", "16",
       "SO(2n+1) table, row 4", false},
      {"SOodd-e", "SO-odd", 3, 10, "SO(<2*n-3>)@[1..<2*n-3>]xSO(3)@[<2*n-1>..<2*n+1>]", "SO(<2*n-3>)@[1..<2*n-3>]xSO(4)@[<2*n-2>..<2*n+1>]",
       "SO(<2*n-2>)@[1..<2*n-2>]xSO(3)@[<2*n-1>..<2*n+1>]", std::nullopt, "SO(2n+1) table, row 5 (n1 = 1)", false},
      {"SOodd-f", "SO-odd", 3, 10, "SO(2)@[1..2]xSO(<2*n-3>)@[5..<2*n+1>]", "U(2)@[1..4]xSO(<2*n-3>)@[5..<2*n+1>]",
       "SO(2)@[1..2]xSO(<2*n-2>)@[4..<2*n+1>]", "2*n*(n+1)", "SO(2n+1) table, row 6", false},
      {"SOodd-g", "SO-odd", 3, 10, "U(<n-2>)@[1..<2*n-4>]xSO(3)@[<2*n-1>..<2*n+1>]", "U(<n-1>)@[1..<2*n-2>]xSO(3)@[<2*n-1>..<2*n+1>]",
       "U(<n-2>)@[1..<2*n-4>]xSO(4)@[<2*n-2>..<2*n+1>]", std::nullopt, "SO(2n+1) table, row 7 (n1 = 2)", false},
      {"SOodd-h", "SO-odd", 3, 10, "S1w(1,2<rep|0|n-2>)xS1w(0,0<rep|1|n-2>)<x|n-3|xSU(<n-2>)@[5..<2*n>]>",
       "SO(3)#irr3in5(1,2,3,4,<2*n+1>)xS1w(0,0<rep|1|n-2>)<x|n-3|xSU(<n-2>)@[5..<2*n>]>", "SO(2)@[1..2]xU(<n-1>)@[3..<2*n>]", "n*2^n",
       "SO(2n+1) table, row 8", false},
      // Spin(2n+1), given by projections to SO(2n+1)
      {"Spin-a1", "Spin-odd", 3, 3, "S1w(2,1,1)xSU(2)@[3..6]", "U(3)@[1..6]", "SO(2)@[1..2]xSO(5)@[3..7]", "14", "Spin(2n+1) table, row 1 (k = 1)", true},
      {"Spin-a2", "Spin-odd", 3, 3, "S1w(2,-3,-3)xSU(2)@[3..6]", "U(3)@[1..6]", "SO(2)@[1..2]xSO(5)@[3..7]", "14", "Spin(2n+1) table, row 1 (k = -3)", true},
      {"Spin-b", "Spin-odd", 3, 3, "SU(3)@[1..6]", "G2#g2so7", "SO(6)@[1..6]", "2", "Spin(2n+1) table, row 2", true},
      {"Spin-c", "Spin-odd", 3, 3, "SU(3)@[1..6]", "G2#g2so7", "U(3)@[1..6]", "8", "Spin(2n+1) table, row 3", true},
      {"Spin-d1", "Spin-odd", 4, 4, "S1w(1,1,1,1)xSU(2)@[1..4]xSU(2)@[5..8]", "U(2)@[1..4]xSO(5)@[5..9]", "SO(5)#sigma(1,2,3,4,9)xU(2)@[5..8]",
       "48", "Spin(2n+1) table, row 4 (l1 = l2 = 1)", true},
      {"Spin-d2", "Spin-odd", 4, 4, "S1w(2,2,1,1)xSU(2)@[1..4]xSU(2)@[5..8]", "U(2)@[1..4]xSO(5)@[5..9]", "SO(5)#sigma(1,2,3,4,9)xU(2)@[5..8]",
       "48", "Spin(2n+1) table, row 4 (l1 = 2, l2 = 1)", true},
      // Sp(n)
      {"Sp-a", "Sp", 3, 10, "Sp(1)@[1..1]xSp(<n-2>)@[3..<n>]", "Sp(1)@[1..1]xSp(<n-1>)@[2..<n>]", "Sp(2)@[1..2]xSp(<n-2>)@[3..<n>]",
       std::nullopt, "Sp(n) table, row 1 (n1 = 2)", false},
      {"Sp-b", "Sp", 2, 10, "Sp(1)#dsp1(1,2)<x|n-2|xSp(<n-2>)@[3..<n>]>", "SO(2)@[1..2]xSp(1)#dsp1(1,2)<x|n-2|xSp(<n-2>)@[3..<n>]>",
       "Sp(1)@[1..1]xSp(<n-1>)@[2..<n>]", "n*(2*n-1)", "Sp(n) table, row 2", false},
      {"Sp-c", "Sp", 2, 2, "Z2.Sp(1)#dsp1(1,2)", "SO(2)@[1..2]xSp(1)#dsp1(1,2)", "Z2.Sp(1)@[1..1]xSp(1)@[2..2]", "8", "Sp(n) table, row 3", false},
      {"Sp-d1", "Sp", 2, 10, "S1w(1,-2<rep|0|n-2>)<x|n-2|xSp(<n-2>)@[3..<n>]>", "U(2)@[1..2]<x|n-2|xSp(<n-2>)@[3..<n>]>",
       "U(1)@[1..1]xSp(<n-1>)@[2..<n>]", "2*n^2", "Sp(n) table, row 4", false},
      {"Sp-d2", "Sp", 2, 10, "U(1)@[1..1]<x|n-2|xSp(<n-2>)@[3..<n>]>", "U(2)@[1..2]<x|n-2|xSp(<n-2>)@[3..<n>]>",
       "U(1)@[1..1]xSp(<n-1>)@[2..<n>]", std::nullopt, "Sp(n) table, row 4 (second circle)", false},
      {"Sp-e", "Sp", 3, 10, "U(2)@[1..2]<x|n-3|xSp(<n-3>)@[4..<n>]>", "U(3)@[1..3]<x|n-3|xSp(<n-3>)@[4..<n>]>",
       "U(2)@[1..2]xSp(<n-2>)@[3..<n>]", std::nullopt, "Sp(n) table, row 5 (n1 = 2)", false},
      {"Sp-f", "Sp", 2, 10, "S1w(1,3<rep|0|n-2>)<x|n-2|xSp(<n-2>)@[3..<n>]>", "Sp(1)#irr3in5(1,2)<x|n-2|xSp(<n-2>)@[3..<n>]>",
       "U(1)@[1..1]xSp(<n-1>)@[2..<n>]", "3*n", "Sp(n) table, row 6", false},
      {"Sp-g", "Sp", 3, 10, "S1w(1,1,1<rep|0|n-3>)xS1w(0,1,-1<rep|0|n-3>)<x|n-3|xSp(<n-3>)@[4..<n>]>",
       "S1w(1,1,1<rep|0|n-3>)xSO(3)#irr3in3c(2,3,1)<x|n-3|xSp(<n-3>)@[4..<n>]>", "U(1)@[1..1]xU(1)@[2..2]xSp(<n-2>)@[3..<n>]",
       "4*n*(n-1)", "Sp(n) table, row 7", false},
      // SO(2n), n >= 4
      {"SOeven-a", "SO-even", 4, 4, "SU(4)@[1..8]", "Spin(7)#spin7so8", "U(4)@[1..8]", "8", "SO(2n) table, row 1", false},
      {"SOeven-b", "SO-even", 5, 5, "S1w(1,0,0,0,0)xSU(4)@[3..10]", "SO(2)@[1..2]xSpin(7)#spin7so8(3,4,5,6,7,8,9,10)", "U(5)@[1..10]",
       "16", "SO(2n) table, row 2", false},
      {"SOeven-c", "SO-even", 4, 10, "S1w(1<rep|0|n-1>)xSU(<n-1>)@[3..<2*n>]", "U(<n>)#sigma(-1<seq|2|2*n>)", "U(<n>)@[1..<2*n>]",
       "2^(n+1)", "SO(2n) table, row 3", false},
      {"SOeven-d", "SO-even", 4, 10, "SO(2)@[1..2]xSO(<2*n-3>)@[4..<2*n>]", "SO(3)@[1..3]xSO(<2*n-3>)@[4..<2*n>]",
       "SO(2)@[1..2]xSO(<2*n-2>)@[3..<2*n>]", std::nullopt, "SO(2n) table, row 4 (n1 = 1)", false},
      {"SOeven-e", "SO-even", 4, 10, "Z2.SO(<2*n-2>)@[3..<2*n>]", "Z2.SO(<2*n-1>)@[2..<2*n>]", "SO(2)@[1..2]xSO(<2*n-2>)@[3..<2*n>]",
       std::nullopt, "SO(2n) table, row 5", false},
      {"SOeven-f", "SO-even", 4, 10, "U(1)@[1..2]xSO(<2*n-4>)@[5..<2*n>]", "U(1)@[1..2]xSO(<2*n-3>)@[4..<2*n>]",
       "U(2)@[1..4]xSO(<2*n-4>)@[5..<2*n>]", std::nullopt, "SO(2n) table, row 6 (n1 = 2)", false},
      {"SOeven-g", "SO-even", 4, 10, "S1w(1<rep|0|n-1>)xS1w(0,0<rep|1|n-2>)xSU(<n-2>)@[5..<2*n>]",
       "SO(3)@[1..3]xS1w(0,0<rep|1|n-2>)xSU(<n-2>)@[5..<2*n>]", "SO(2)@[1..2]xU(<n-1>)@[3..<2*n>]", "n*2^(n-1)", "SO(2n) table, row 7",
       false},
  };
  return c;
}

inline const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("no catalog entry " + id);
}

inline Diagram instantiate_entry(const CatalogEntry& e, long long n) {
  if (n < e.n_min || n > e.n_max)
    throw std::out_of_range(e.id + ": n = " + std::to_string(n) + " outside [" + std::to_string(e.n_min) + ", " +
                            std::to_string(e.n_max) + "]");
  GroupExpr G = parse_group(family_group(e.family, n));
  return make_diagram(G, parse_group(expand_template(e.Kminus, n)), parse_group(expand_template(e.Kplus, n)),
                      parse_group(expand_template(e.H, n)));
}

// ---------------------------------------------------------------- verification

enum class Verdict { Match, Discrepancy, NoPrintedValue };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Discrepancy: return "DISCREPANCY";
    case Verdict::NoPrintedValue: return "NO_PRINTED_VALUE";
  }
  return "?";
}

struct VerifyReport {
  std::string id;
  std::string family;
  long long n = 0;
  std::string diagram;
  Report validation;
  Report filters;
  long long chi = 0;
  long long chi_uncorrected = 0;
  long long dim = 0;
  std::optional<std::string> printed;
  std::optional<long long> printed_value;
  Verdict verdict = Verdict::NoPrintedValue;
  std::string error;
  bool spin_level = false;

  bool predicates_pass() const { return error.empty() && all_pass(validation) && all_pass(filters); }
};

// chi of the Spin-level diagram from its projection, doubling terms whose preimage is disconnected.
inline long long spin_corrected_chi(const Diagram& d, bool correct = true) {
  GroupExpr G = ambient_group(diagram_ambient(d));
  long long total = 0;
  auto term = [&](const GroupExpr& K, int sign) {
    long long c = euler_char(G, K);
    if (correct && c != 0 && !pi1_surjective_in_SO(K)) c *= 2;
    total += sign * c;
  };
  term(d.Kminus, 1);
  term(d.Kplus, 1);
  term(d.H, -1);
  return total;
}

inline VerifyReport verify_entry(const CatalogEntry& e, long long n, bool spin_correction = true) {
  VerifyReport r;
  r.id = e.id;
  r.family = e.family;
  r.n = n;
  r.printed = e.printed_chi;
  r.spin_level = e.spin_level;
  try {
    Diagram d = instantiate_entry(e, n);
    r.diagram = format_diagram(d);
    r.validation = validate_diagram(d);
    r.filters = necessary_filters(d);
    r.chi_uncorrected = euler_char_M(d);
    r.chi = e.spin_level ? spin_corrected_chi(d, spin_correction) : r.chi_uncorrected;
    r.dim = dim_M(d);
    if (e.printed_chi) {
      r.printed_value = ChiExpr(*e.printed_chi).eval(n);
      r.verdict = *r.printed_value == r.chi ? Verdict::Match : Verdict::Discrepancy;
    } else {
      r.verdict = Verdict::NoPrintedValue;
    }
  } catch (const std::exception& ex) {
    r.error = ex.what();
    r.verdict = e.printed_chi ? Verdict::Discrepancy : Verdict::NoPrintedValue;
  }
  return r;
}

inline std::vector<long long> default_samples(const CatalogEntry& e) {
  std::set<long long> s{e.n_min};
  if (e.n_min + 1 <= e.n_max) s.insert(e.n_min + 1);
  s.insert(std::min<long long>(8, e.n_max) < e.n_min ? e.n_min : std::min<long long>(8, e.n_max));
  return {s.begin(), s.end()};
}

struct VerifySummary {
  std::vector<VerifyReport> reports;
  int match = 0, discrepancy = 0, no_printed = 0;
};

// ranges: family -> list of n; an empty optional means the default sampling grid for every entry.
inline VerifySummary verify_all(const std::optional<std::map<std::string, std::vector<long long>>>& ranges = std::nullopt) {
  VerifySummary s;
  for (const auto& e : catalog()) {
    std::vector<long long> ns;
    if (!ranges) {
      ns = default_samples(e);
    } else {
      auto it = ranges->find(e.family);
      if (it == ranges->end()) continue;
      for (long long n : it->second)
        if (n >= e.n_min && n <= e.n_max) ns.push_back(n);
    }
    for (long long n : ns) {
      s.reports.push_back(verify_entry(e, n));
      switch (s.reports.back().verdict) {
        case Verdict::Match: ++s.match; break;
        case Verdict::Discrepancy: ++s.discrepancy; break;
        case Verdict::NoPrintedValue: ++s.no_printed; break;
      }
    }
  }
  return s;
}

}  // namespace cohom
