#include "catch_amalgamated.hpp"
#include "cohom/borel_siebenthal.hpp"
#include "cohom/homogeneous.hpp"
#include "oracles.hpp"

using namespace cohom;

namespace {
long long chi(const std::string& G, const std::string& K) { return euler_char(parse_group(G), parse_group(K)); }
std::string su(int n) { return "SU(" + std::to_string(n) + ")"; }
}  // namespace

TEST_CASE("euler characteristic examples", "[homogeneous]") {
  CHECK(chi("SU(3)", "SU{1,2}") == 3);
  CHECK(chi("SU(3)", "T2") == 6);
  CHECK(chi("SU(3)", "SO(3)") == 0);
  CHECK(chi("Sp(2)", "Z2.Sp(1)xSp(1)") == 1);
  CHECK(chi("Sp(2)", "Sp(1)xSp(1)") == 2);
}

TEST_CASE("dimension and corank examples", "[homogeneous]") {
  CHECK(dim_quotient(parse_group("Spin(7)"), parse_group("G2")) == 7);
  CHECK(dim_quotient(parse_group("SU(3)"), parse_group("SU(3)")) == 0);
  CHECK(dim_quotient(parse_group("SO(9)"), parse_group("SO(8)")) == 8);
  CHECK(corank(parse_group("SU(4)"), parse_group("S1xSU(2)")) == 1);
  CHECK(corank(parse_group("SO(7)"), parse_group("SU(3)")) == 1);
  CHECK(corank(parse_group("Sp(3)"), parse_group("Sp(3)")) == 0);
  auto q = quotient_invariants(parse_group("SU(4)"), parse_group("SU{2,2}"));
  CHECK(q.dim_quotient == 8);
  CHECK(q.corank == 0);
  CHECK(q.euler == 6);
}

TEST_CASE("malformed descriptors are errors", "[homogeneous]") {
  CHECK_THROWS_AS(dim_quotient(parse_group("SU(3)"), parse_group("SU(4)")), DescriptorError);
  CHECK_THROWS_AS(corank(parse_group("SU(3)"), parse_group("T3")), DescriptorError);
  CHECK_THROWS_AS(chi("SU(3)", "Z4.SU{1,2}"), DescriptorError);
  CHECK_THROWS_AS(chi("SU(3)", "SU(2)xSU(2)"), DescriptorError);
}

TEST_CASE("euler characteristic against torus fixed points", "[homogeneous]") {
  for (int n = 1; n <= 8; ++n) CHECK(chi(su(n + 1), "SU{1," + std::to_string(n) + "}") == oracle::grassmannian_fixed_points(1, n));
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; a + b <= 10; ++b)
      CHECK(chi(su(a + b), "SU{" + std::to_string(a) + "," + std::to_string(b) + "}") == oracle::grassmannian_fixed_points(a, b));
  for (int n = 2; n <= 8; ++n)
    CHECK(chi("SO(" + std::to_string(2 * n) + ")", "U(" + std::to_string(n) + ")") == oracle::complex_structure_fixed_points(n));
  for (int n = 1; n <= 8; ++n)
    CHECK(chi("SO(" + std::to_string(2 * n + 1) + ")", "SO(" + std::to_string(2 * n) + ")") == oracle::even_sphere_fixed_points(n));
}

TEST_CASE("maximal rank quotients satisfy the Weyl identity", "[homogeneous]") {
  for (const char* G : {"SU(4)", "SU(6)", "SO(7)", "SO(9)", "SO(8)", "SO(10)", "Sp(3)", "Sp(4)"}) {
    GroupExpr g = parse_group(G);
    for (const auto& K : maximal_rank_subgroups(g, 4, true)) {
      INFO(G << " / " << format_group(K));
      CHECK(euler_char(g, K) * weyl_order(K) == weyl_order(g));
      CHECK(euler_char(g, K) > 0);
      CHECK(corank(g, K) == 0);
      CHECK(dim_quotient(g, K) == dim(g) - dim(K));
    }
  }
}

TEST_CASE("component doubling halves chi or is rejected", "[homogeneous]") {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"SU(3)", "SU{1,2}"}, {"SU(3)", "T2"}, {"SU(4)", "SU{2,2}"}, {"SU(4)", "SU{1,1,2}"}, {"SU(4)", "SU{1,3}"}};
  for (auto [g, K] : cases) {
    GroupExpr G = parse_group(g);
    GroupExpr k = parse_group(K);
    long long base = euler_char(G, k);
    k.components = 2;
    if (base % 2 == 0) CHECK(euler_char(G, k) * 2 == base);
    else CHECK_THROWS_AS(euler_char(G, k), DescriptorError);
  }
}

TEST_CASE("chi vanishes exactly on positive corank", "[homogeneous]") {
  for (const char* K : {"SU(3)", "SO(4)", "S1xSU(2)", "Sp(1)xSp(1)", "T2", "SU{1,3}"}) {
    GroupExpr G = parse_group("SU(4)"), k = parse_group(K);
    INFO(K);
    CHECK((euler_char(G, k) == 0) == (corank(G, k) > 0));
  }
}
