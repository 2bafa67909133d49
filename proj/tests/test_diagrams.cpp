#include "catch_amalgamated.hpp"
#include "cohom/catalog.hpp"
#include "cohom/enumerator.hpp"

using namespace cohom;

namespace {

bool passes(const Report& r, const std::string& name) {
  for (const auto& c : r)
    if (c.check == name) return c.pass;
  FAIL("no check named " << name);
  return false;
}

// Scalars zeta*I of SU(n) of the form diag(z^w_i * s_b(i)) with s_b central in the SU block b.
long long centre_in_circle_blocks(int n, const std::vector<long long>& w, const std::vector<std::pair<int, int>>& blocks) {
  const long long M = 720;
  long long count = 0;
  for (long long j = 0; j < n; ++j) {
    const long long zeta = j * M / n;
    bool found = false;
    for (long long a = 0; a < M && !found; ++a) {
      bool ok = true;
      std::vector<long long> need(n);
      for (int i = 0; i < n; ++i) need[i] = (((zeta - a * w[i]) % M) + M) % M;
      std::vector<bool> covered(n, false);
      for (auto [lo, hi] : blocks) {
        const int len = hi - lo + 1;
        for (int i = lo; i <= hi; ++i) {
          covered[i - 1] = true;
          ok = ok && need[i - 1] == need[lo - 1] && (need[i - 1] * len) % M == 0;
        }
      }
      for (int i = 0; i < n; ++i) ok = ok && (covered[i] || need[i] == 0);
      found = ok;
    }
    if (found) ++count;
  }
  return count;
}

std::vector<Diagram> population() {
  std::vector<Diagram> out;
  for (const auto& e : catalog())
    for (long long n : default_samples(e)) out.push_back(instantiate_entry(e, n));
  for (const char* G : {"SU(3)", "Sp(2)", "SO(7)"}) {
    EnumConfig cfg;
    cfg.kmax = 2;
    for (const auto& c : enumerate_candidates(parse_group(G), cfg)) out.push_back(c.diagram);
  }
  return out;
}

}  // namespace

TEST_CASE("validation of a known diagram", "[diagrams]") {
  Diagram d = parse_diagram("S1w(-1,1,0) < SO(3)#irr3in3c , SU{1,2} < SU(3)");
  CHECK(all_pass(validate_diagram(d)));
  CHECK(all_pass(necessary_filters(d)));
  CHECK(d.wminus.quotient.kind == QKind::Sphere);
  CHECK(d.wminus.l == 2);
  CHECK(d.wplus.l == 3);
}

TEST_CASE("validation failures", "[diagrams]") {
  Diagram equal = parse_diagram("SU{1,2} < SU{1,2} , SU{1,2} < SU(3)");
  CHECK_FALSE(passes(validate_diagram(equal), "l-minus-positive"));
  Diagram nested = parse_diagram("SO(5)@[1..5] < SO(6)@[1..6] , SO(2)@[1..2]xSO(5)@[3..7] < SO(7)");
  CHECK_FALSE(passes(validate_diagram(nested), "inclusion-plus"));
  CHECK(passes(validate_diagram(nested), "inclusion-minus"));
  CHECK_THROWS_AS(parse_diagram("SU(2) < SU(3)"), ParseError);
  CHECK_THROWS_AS(parse_diagram("S1 < SU(2) , SU(2) < SU(2)xSU(2)"), ParseError);
}

TEST_CASE("euler characteristic and dimension of M", "[diagrams]") {
  CHECK(euler_char_M(parse_diagram("S1w(1,-1,0) < SO(3)#irr3in3c , SU{1,2} < SU(3)")) == 3);
  CHECK(euler_char_M(parse_diagram("S1w(-2,4,-1,-1)xSU(2)@[3..4] < SU{2,2} , SU{1,3} < SU(4)")) == 10);
  CHECK(euler_char_M(instantiate_entry(find_entry("Sp-b"), 3)) == 15);
  CHECK(dim_M(parse_diagram("S1w(1,-1,0) < SO(3)#irr3in3c , SU{1,2} < SU(3)")) == 8);
  CHECK(dim_M(parse_diagram("SU(3)@[1..6] < G2#g2so7 , U(3)@[1..6] < SO(7)")) == 14);
  CHECK(dim_M(parse_diagram("S1w(-2,4,-1,-1)xSU(2)@[3..4] < SU{2,2} , SU{1,3} < SU(4)")) == 12);
}

TEST_CASE("necessary filters", "[diagrams]") {
  Diagram torus = parse_diagram("T5 < SU(6) , T5 < SU(6)");
  CHECK_FALSE(passes(necessary_filters(torus), "F4"));
  Diagram even = parse_diagram("Z2.SO(2)@[1..2]xSO(2)@[3..4] < SO(4)@[1..4] , SO(2)@[1..2]xSO(3)@[3..5] < SO(5)");
  CHECK(euler_char_M(even) > 0);
  CHECK_FALSE(passes(necessary_filters(even), "F2"));
  CHECK_FALSE(passes(necessary_filters(even), "F3"));
  Diagram trivial_twice = parse_diagram("SU{2,2} < SU{2,2} , SU{2,2} < SU(4)");
  CHECK_FALSE(passes(necessary_filters(trivial_twice), "F5"));
}

TEST_CASE("diagram normalization", "[diagrams]") {
  Diagram swapped = parse_diagram("S1w(1,-1,0) < SU{1,2} , SO(3)#irr3in3c < SU(3)");
  Diagram n = normalize_diagram(swapped);
  CHECK(format_group(n.Kplus) == "SU{1,2} in SU(3)");
  CHECK(format_diagram(n) == format_diagram(normalize_diagram(parse_diagram("S1w(-1,1,0) < SO(3)#irr3in3c , SU{1,2} < SU(3)"))));
}

TEST_CASE("action kernel", "[diagrams]") {
  auto order = [](const std::string& text) {
    KernelOrder k = action_kernel_order(parse_diagram(text));
    REQUIRE(k.known);
    return k.order;
  };
  CHECK(order("SU(2)@[1..2]xSU(2)@[3..4]xS1w(1,1,-1,-1) < SU{1,3} , SU{2,2} < SU(4)") == 4);
  CHECK(order("S1w(-2,4,-1,-1)xSU(2)@[3..4] < SU{2,2} , SU{1,3} < SU(4)") ==
        centre_in_circle_blocks(4, {-2, 4, -1, -1}, {{3, 4}}));
  CHECK(order("S1w(1,1,-1,-1)xSU(2)@[3..4] < SU{2,2} , SU{1,3} < SU(4)") == centre_in_circle_blocks(4, {1, 1, -1, -1}, {{3, 4}}));
  CHECK(order("S1w(1,-1,0) < SO(3)#irr3in3c , SU{1,2} < SU(3)") == centre_in_circle_blocks(3, {1, -1, 0}, {}));
  CHECK(order("SU(3)@[1..6] < G2#g2so7 , U(3)@[1..6] < SO(7)") == 1);
  CHECK(order("SO(2)@[1..2]xSO(4)@[4..7] < SO(3)@[1..3]xSO(4)@[4..7] , SO(2)@[1..2]xSO(5)@[3..7] < SO(7)") == 1);
}

TEST_CASE("non-primitivity detector", "[diagrams]") {
  CHECK(nonprimitive_witness(parse_diagram("SO(4)@[1..4] < SO(5)@[1..5] , SO(2)@[1..2]xSO(3)@[3..5] < SO(7)")).has_value());
  CHECK_FALSE(nonprimitive_witness(parse_diagram("SU(3)@[1..6] < G2#g2so7 , U(3)@[1..6] < SO(7)")).has_value());
}

TEST_CASE("diagram invariants over catalog and candidates", "[diagrams]") {
  for (const auto& d : population()) {
    INFO(format_diagram(d));
    const GroupExpr G = ambient_group(diagram_ambient(d));
    const long long chi = euler_char_M(d);
    CHECK(chi == euler_char(G, d.Kminus) + euler_char(G, d.Kplus) - euler_char(G, d.H));
    if (chi > 0) {
      CHECK(dim_M(d) % 2 == 0);
      CHECK(std::max(rank(d.Kminus), rank(d.Kplus)) == rank(G));
    }
    Diagram n = normalize_diagram(d);
    CHECK(format_diagram(normalize_diagram(n)) == format_diagram(n));
    CHECK(all_pass(validate_diagram(n)) == all_pass(validate_diagram(d)));
    Diagram s = make_diagram(d.G, d.Kplus, d.Kminus, d.H);
    CHECK(euler_char_M(s) == chi);
    CHECK(dim_M(s) == dim_M(d));
    CHECK(d.wminus.l == dim(d.Kminus) - dim(d.H));
    CHECK(d.wplus.l == dim(d.Kplus) - dim(d.H));
  }
}
