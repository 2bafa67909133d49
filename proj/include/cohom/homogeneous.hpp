#pragma once

#include "groups.hpp"

#include <stdexcept>

namespace cohom {

struct QuotientInvariants {
  long long dim_quotient = 0;
  int corank = 0;
  long long euler = 0;
};

struct DescriptorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long dim_quotient(const GroupExpr& G, const GroupExpr& K) {
  long long d = dim(G) - dim(K);
  if (d < 0) throw DescriptorError("dim(K) exceeds dim(G): " + format_group(K));
  return d;
}

inline int corank(const GroupExpr& G, const GroupExpr& K) {
  int c = rank(G) - rank(K);
  if (c < 0) throw DescriptorError("rank(K) exceeds rank(G): " + format_group(K));
  return c;
}

// chi(G/K) = o(G)/o(K0)/|K/K0| for maximal rank K, else 0.
inline long long euler_char(const GroupExpr& G, const GroupExpr& K) {
  if (G.components != 1) throw DescriptorError("G must be connected");
  if (corank(G, K) > 0) return 0;
  long long wg = weyl_order(G), wk = weyl_order(K);
  if (wg % wk != 0) throw DescriptorError("Weyl order of " + format_group(K) + " does not divide that of G");
  long long chi0 = wg / wk;
  if (chi0 % K.components != 0)
    throw DescriptorError("component order of " + format_group(K) + " does not divide chi(G/K0)");
  return chi0 / K.components;
}

inline QuotientInvariants quotient_invariants(const GroupExpr& G, const GroupExpr& K) {
  return {dim_quotient(G, K), corank(G, K), euler_char(G, K)};
}

}  // namespace cohom
