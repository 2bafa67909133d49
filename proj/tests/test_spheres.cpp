#include "catch_amalgamated.hpp"
#include "cohom/spheres.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace cohom;

namespace {
bool has(const std::vector<PairInstance>& v, const std::string& a, const std::string& i) {
  return std::any_of(v.begin(), v.end(), [&](const PairInstance& p) { return p.acting == a && p.isotropy == i; });
}
QuotientId classify(const std::string& K, const std::string& H) { return classify_quotient(parse_group(K), parse_group(H)); }
}  // namespace

TEST_CASE("transitive sphere actions", "[spheres]") {
  auto six = transitive_pairs_on_sphere(6);
  CHECK(six.size() == 2);
  CHECK(has(six, "SO(7)", "SO(6)"));
  CHECK(has(six, "G2", "SU(3)"));
  auto fifteen = transitive_pairs_on_sphere(15);
  CHECK(has(fifteen, "Spin(9)", "Spin(7)"));
  CHECK(has(fifteen, "Sp(4)", "Sp(3)"));
  CHECK(has(fifteen, "SU(8)", "SU(7)"));
  auto two = transitive_pairs_on_sphere(2);
  REQUIRE(two.size() == 1);
  CHECK(has(two, "SO(3)", "SO(2)"));
  CHECK(has(transitive_pairs_on_sphere(1), "S1", "1"));
}

TEST_CASE("sphere dimension equals dimension drop", "[spheres]") {
  for (int m = 1; m <= 40; ++m)
    for (const auto& p : transitive_pairs_on_sphere(m)) {
      INFO(p.acting << " / " << p.isotropy);
      CHECK(p.m == m);
      CHECK(dim(parse_group(p.acting)) - dim(parse_group(p.isotropy)) == m);
    }
}

TEST_CASE("isotropy circle weights", "[spheres]") {
  CHECK(sphere_isotropy_circle(3, 0) == std::vector<long long>{2, 0, 0});
  CHECK(sphere_isotropy_circle(3, 1) == std::vector<long long>{4, -1, -1});
  CHECK(sphere_isotropy_circle(4, -1) == std::vector<long long>{0, 1, 1, 1});
}

TEST_CASE("circle index examples", "[spheres]") {
  CHECK(pi1_index_circle(4, 3, 2) == 1);
  CHECK(pi1_index_circle(6, 1, 3) == 2);
  CHECK(pi1_index_circle(5, 2, 3) == 1);
  CHECK_THROWS(pi1_index_circle(2, 1, 3));
  CHECK_THROWS(pi1_index_circle(0, 0, 3));
  CHECK_THROWS(pi1_index_circle(4, 2, 3));
}

TEST_CASE("circle index agrees with deck transformations", "[spheres]") {
  int compared = 0;
  for (int n = 2; n <= 6; ++n)
    for (long long l = -12; l <= 12; ++l)
      for (long long k = -12; k <= 12; ++k) {
        if (std::gcd(l, k) != 1 || l - k * (n - 1) == 0) continue;
        INFO(l << " " << k << " " << n);
        CHECK(pi1_index_circle(l, k, n) == oracle::deck_index(l, k, n));
        ++compared;
      }
  CHECK(compared > 1000);
}

TEST_CASE("index two family", "[spheres]") {
  for (int n = 3; n <= 10; ++n)
    for (long long k = -9; k <= 9; k += 2) {
      long long l = (k + 2) * (n - 1);
      if (std::gcd(l, k) != 1) continue;
      CHECK(pi1_index_circle(l, k, n) == 2);
    }
}

TEST_CASE("fundamental group surjectivity in SO", "[spheres]") {
  for (int n = 2; n <= 6; ++n)
    CHECK(pi1_surjective_in_SO(parse_group("U(" + std::to_string(n) + ")@[1.." + std::to_string(2 * n) + "] in SO(" + std::to_string(2 * n) + ")")));
  for (int n = 2; n <= 5; ++n)
    for (long long k : {-3, -1, 1, 3}) {
      std::string w = "S1w(" + std::to_string((k + 2) * (n - 1));
      for (int i = 1; i < n; ++i) w += "," + std::to_string(-k);
      CHECK_FALSE(pi1_surjective_in_SO(parse_group(w + ") in SO(" + std::to_string(2 * n + 1) + ")")));
    }
  CHECK_FALSE(pi1_surjective_in_SO(parse_group("G2#g2so7 in SO(7)")));
  CHECK_THROWS(pi1_surjective_in_SO(parse_group("SU(2)@[1..2] in SU(3)")));
}

TEST_CASE("surjectivity is monotone under adding factors", "[spheres]") {
  const std::vector<std::string> base = {"S1w(1,0,0)", "S1w(2,0,0)", "SU(3)@[1..6]", "U(2)@[1..4]", "G2#g2so7", "SO(3)@[5..7]"};
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j) continue;
      GroupExpr a, ab;
      try {
        a = parse_group(base[i] + " in SO(7)");
        ab = parse_group(base[i] + "x" + base[j] + " in SO(7)");
      } catch (const ParseError&) {
        continue;
      }
      INFO(base[i] << " x " << base[j]);
      if (pi1_surjective_in_SO(a)) CHECK(pi1_surjective_in_SO(ab));
    }
}

TEST_CASE("quotient recognition", "[spheres]") {
  auto g2 = classify("G2#g2so7 in SO(7)", "SU(3)@[1..6] in SO(7)");
  CHECK(g2.kind == QKind::Sphere);
  CHECK(g2.m == 6);
  for (long long k = -3; k <= 3; ++k) {
    auto w = sphere_isotropy_circle(3, k);
    std::string h = "S1w(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")xSU(2)@[3..6] in SO(7)";
    auto q = classify("U(3)@[1..6] in SO(7)", h);
    INFO(h);
    CHECK(q.kind == QKind::Sphere);
    CHECK(q.m == 5);
  }
  auto rp = classify("U(3)@[1..6] in SO(7)", "S1w(6,-1,-1)xSU(2)@[3..6] in SO(7)");
  CHECK(rp.kind == QKind::Projective);
  CHECK(rp.m == 5);
  auto s7 = classify("Sp(2)@[1..2]xSp(1)@[3..3] in Sp(3)", "Sp(1)@[2..2]xSp(1)#dsp1(1,3) in Sp(3)");
  CHECK(s7.kind == QKind::Sphere);
  CHECK(s7.m == 7);
  auto even = classify("SO(5)@[3..7] in SO(7)", "SO(4)@[4..7] in SO(7)");
  CHECK(even.kind == QKind::Sphere);
  CHECK(even.m == 4);
  auto no = classify("SU(3)@[1..6] in SO(7)", "SO(3)@[1..3] in SO(7)");
  CHECK_FALSE(no.recognized());
}

TEST_CASE("even spheres preserve rank", "[spheres]") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"SO(5)@[3..7] in SO(7)", "SO(4)@[4..7] in SO(7)"},
      {"G2#g2so7 in SO(7)", "SU(3)@[1..6] in SO(7)"},
      {"SO(3)@[1..3]xSO(4)@[4..7] in SO(7)", "SO(2)@[1..2]xSO(4)@[4..7] in SO(7)"},
      {"U(3)@[1..6] in SO(7)", "S1w(4,-1,-1)xSU(2)@[3..6] in SO(7)"},
  };
  for (const auto& [K, H] : pairs) {
    auto q = classify(K, H);
    INFO(K << " / " << H);
    REQUIRE(q.recognized());
    CHECK(q.m == dim(parse_group(K)) - dim(parse_group(H)));
    if (q.kind == QKind::Sphere && q.m % 2 == 0) CHECK(rank(parse_group(K)) == rank(parse_group(H)));
    if (q.m % 2 == 1) CHECK(rank(parse_group(K)) == rank(parse_group(H)) + 1);
  }
}
