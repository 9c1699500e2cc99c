#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "dpcolor/discharging.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/potential.hpp"
#include "support/support.hpp"

using namespace dpcolor;

namespace {

// triangles 0-1-2 and 3-4-5 joined by the bridge 2-3
Multigraph two_triangles_bridge() {
  return Multigraph::build(
      6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
}

// triple edge 0=1, bridge 1-2, triangle 2-3-4
Multigraph triple_bridge_triangle() {
  return Multigraph::build(5, {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
}

}  // namespace

TEST_CASE("special_sets") {
  SUBCASE("bridgeless graphs take the whole vertex set") {
    SpecialSets s = special_sets(clique_multiple(4, 1), {3, 3, 3, 3});
    CHECK(s.defined);
    CHECK(s.reason == "no cut edges; S0* = V(G)");
    CHECK(s.s0 == std::vector<int>{0, 1, 2, 3});
    CHECK(s.x0 == -1);
    CHECK(s.y0 == -1);
    CHECK(s.low == std::vector<int>{0, 1, 2, 3});
    CHECK(s.b0 == s.low);
  }
  SUBCASE("ties between pendent blocks break toward the least vertex set") {
    SpecialSets s = special_sets(two_triangles_bridge(), {2, 2, 3, 3, 2, 2});
    CHECK(s.defined);
    CHECK(s.reason == "smallest pendent edge-block distinct from K_2");
    CHECK(s.s0 == std::vector<int>{0, 1, 2});
    CHECK(s.x0 == 2);
    CHECK(s.y0 == 3);
    CHECK(s.low == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(s.b0 == std::vector<int>{0, 1, 2});
  }
  SUBCASE("fewer vertices beats fewer edges") {
    SpecialSets s = special_sets(triple_bridge_triangle(), {3, 4, 3, 2, 2});
    CHECK(s.defined);
    CHECK(s.s0 == std::vector<int>{0, 1});
    CHECK(s.x0 == 1);
    CHECK(s.y0 == 2);
  }
  SUBCASE("equal vertex counts fall back to the edge count") {
    // 0=1 (triple), bridge 1-2, 2=3 (double): both pendent blocks have 2 vertices
    Multigraph g = Multigraph::build(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}});
    SpecialSets s = special_sets(g, {3, 4, 3, 2});
    CHECK(s.defined);
    CHECK(s.s0 == std::vector<int>{2, 3});
    CHECK(s.x0 == 2);
    CHECK(s.y0 == 1);
  }
  SUBCASE("undefined when every pendent edge-block is a single edge") {
    Multigraph p3g = Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    SpecialSets p3 = special_sets(p3g, {1, 2, 1});
    CHECK_FALSE(p3.defined);
    CHECK(p3.reason == "undefined: every pendent edge-block is a K_2");
    Multigraph star = Multigraph::build(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK_FALSE(special_sets(star, {3, 1, 1, 1}).defined);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(special_sets(Multigraph::build(2, {}), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(special_sets(clique_multiple(3, 1), {2, 2}), std::invalid_argument);
  }
}

TEST_CASE("discharge ledgers on handpicked graphs") {
  SUBCASE("K_2^4 at lists of size 4, k = 5") {
    ChargeLedger led = discharge(clique_multiple(2, 4), {4, 4}, 5);
    REQUIRE(led.vertices.size() == 2);
    for (const VertexCharge& c : led.vertices) {
      CHECK(c.tag == "L2");
      CHECK(c.initial == Rat(25));
      CHECK(c.after_pairs == rat(-1, 2));
      CHECK(c.final_charge == rat(-1, 2));
    }
    CHECK(led.pair_initial == std::vector<Rat>{Rat(-51)});
    CHECK(led.total == Rat(-1));
    CHECK(led.rho_total == Rat(-1));

    CaseReport cases = check_cases(clique_multiple(2, 4), led);
    CHECK(cases.all_hold);
    for (const CaseRow& row : cases.rows) {
      CHECK(row.has_bound);
      CHECK(row.bound == rat(-1, 2));  // L2 is an equality
    }
  }
  SUBCASE("C_4 with one list enlarged: mixed low/high transfers") {
    Multigraph c4 = cycle_multiple(4, 1);
    ChargeLedger led = discharge(c4, {2, 2, 2, 3}, 5);
    CHECK(led.vertices[0].tag == "L1");
    CHECK(led.vertices[3].tag == "H");
    CHECK(led.vertices[0].final_charge == Rat(-2));
    CHECK(led.vertices[1].final_charge == Rat(-1));
    CHECK(led.vertices[2].final_charge == Rat(-2));
    CHECK(led.vertices[3].final_charge == Rat(7));
    CHECK(led.total == Rat(2));
    CHECK(led.rho_total == Rat(2));

    CaseReport cases = check_cases(c4, led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[0].bound == Rat(-2));
    CHECK(cases.rows[1].bound == Rat(-1));
    CHECK_FALSE(cases.rows[3].has_bound);
    CHECK(cases.rows[3].note == "h(v) > d(v); no rule-derived ceiling");
  }
  SUBCASE("N1: a vertex with a short list") {
    Multigraph c4 = cycle_multiple(4, 1);
    ChargeLedger led = discharge(c4, {1, 2, 2, 2}, 5);
    CHECK(led.vertices[0].tag == "N1");
    CHECK(led.vertices[0].final_charge == Rat(-6));
    CHECK(led.total == Rat(-11));
    CHECK(led.rho_total == Rat(-11));
    CaseReport cases = check_cases(c4, led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[0].bound == Rat(-5));
  }
  SUBCASE("N2: degree exactly k") {
    ChargeLedger led = discharge(clique_multiple(6, 1), {4, 4, 4, 4, 4, 4}, 5);
    for (const VertexCharge& c : led.vertices) {
      CHECK(c.tag == "N2");
      CHECK(c.final_charge == Rat(-5));
    }
    CHECK(led.total == Rat(-30));
    CHECK(led.rho_total == Rat(-30));
    CaseReport cases = check_cases(clique_multiple(6, 1), led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[0].bound == Rat(0));
  }
  SUBCASE("N3: degree above k") {
    ChargeLedger led = discharge(clique_multiple(7, 1), {4, 4, 4, 4, 4, 4, 4}, 5);
    for (const VertexCharge& c : led.vertices) {
      CHECK(c.tag == "N3");
      CHECK(c.final_charge == Rat(-11));
    }
    CHECK(led.total == Rat(-77));
    CHECK(led.rho_total == Rat(-77));
    CaseReport cases = check_cases(clique_multiple(7, 1), led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[0].bound == Rat(-5));
  }
  SUBCASE("vertices outside S0* are exempt") {
    Multigraph g = two_triangles_bridge();
    ChargeLedger led = discharge(g, {2, 2, 3, 3, 2, 2}, 5);
    CHECK(led.vertices[2].tag == "L1");
    CHECK(led.vertices[3].tag == "outside");
    for (const VertexCharge& c : led.vertices) CHECK(c.final_charge == Rat(-1));
    CHECK(led.total == Rat(-6));
    CHECK(led.rho_total == Rat(-6));
    CaseReport cases = check_cases(g, led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[3].note == "not in S0*");
    CHECK_FALSE(cases.rows[3].has_bound);
  }
  SUBCASE("rule 3 crosses a multiple edge inside S0*") {
    Multigraph g = triple_bridge_triangle();
    ChargeLedger led = discharge(g, {3, 3, 3, 2, 2}, 5);
    CHECK(led.vertices[0].tag == "L1");
    CHECK(led.vertices[1].tag == "N1");
    CHECK(led.vertices[0].after_pairs == Rat(-2));
    CHECK(led.vertices[0].final_charge == Rat(-5));  // pays 3*alpha across the triple edge
    CHECK(led.vertices[1].after_pairs == Rat(-8));
    CHECK(led.vertices[1].final_charge == Rat(-5));
    CHECK(led.total == Rat(-13));
    CHECK(led.rho_total == Rat(-13));
    CaseReport cases = check_cases(g, led);
    CHECK(cases.all_hold);
    CHECK(cases.rows[0].bound == Rat(-5));  // tight for the paying vertex
    CHECK(cases.rows[1].bound == Rat(-3));
  }
  SUBCASE("errors") {
    Multigraph p3g = Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_AS(discharge(p3g, {1, 2, 1}, 5), std::runtime_error);
    CHECK_THROWS_AS(discharge(clique_multiple(2, 4), {5, 4}, 5), std::invalid_argument);
    CHECK_THROWS_AS(discharge(clique_multiple(2, 4), {-1, 4}, 5), std::invalid_argument);
  }
}

TEST_CASE("component sums against the tree potential") {
  PotentialParams pp = potential_params(5);
  SUBCASE("K_2^4: hypotheses blocked by a forbidden regular block") {
    ChargeLedger led = discharge(clique_multiple(2, 4), {4, 4}, 5);
    ComponentSumReport rep = component_sum_vs_phi(clique_multiple(2, 4), led);
    CHECK_FALSE(rep.vacuous);
    REQUIRE(rep.components.size() == 1);
    const ComponentPhi& cp = rep.components[0];
    CHECK(cp.vertices == std::vector<int>{0, 1});
    CHECK(cp.phi.phi == Rat(1));
    CHECK(cp.bound == Rat(0));
    CHECK(cp.ch_sum == Rat(-1));
    CHECK(cp.sum_le_bound);
    CHECK_FALSE(cp.phi.hypotheses_met);
    CHECK(rep.all_hold);
  }
  SUBCASE("a path component with short lists") {
    ChargeLedger led = discharge(cycle_multiple(4, 1), {2, 2, 2, 3}, 5);
    ComponentSumReport rep = component_sum_vs_phi(cycle_multiple(4, 1), led);
    REQUIRE(rep.components.size() == 1);
    const ComponentPhi& cp = rep.components[0];
    CHECK(cp.vertices == std::vector<int>{0, 1, 2});
    CHECK(cp.phi.phi == Rat(5));
    CHECK(cp.bound == Rat(-4));
    CHECK(cp.ch_sum == Rat(-5));
    CHECK(cp.sum_le_bound);
    CHECK_FALSE(cp.phi.hypotheses_met);  // h = 2 falls below the admitted range
    CHECK(rep.all_hold);
  }
  SUBCASE("a singleton component meeting every hypothesis") {
    Multigraph g = triple_bridge_triangle();
    ChargeLedger led = discharge(g, {3, 3, 3, 2, 2}, 5);
    ComponentSumReport rep = component_sum_vs_phi(g, led);
    REQUIRE(rep.components.size() == 1);
    const ComponentPhi& cp = rep.components[0];
    CHECK(cp.vertices == std::vector<int>{0});
    CHECK(cp.phi.phi == Rat(4));
    CHECK(cp.bound == Rat(-3));
    CHECK(cp.ch_sum == Rat(-5));
    CHECK(cp.phi.hypotheses_met);
    CHECK(cp.strict_ok);
    CHECK(rep.all_hold);
  }
  SUBCASE("triangle component sits exactly on its bound") {
    Multigraph g = two_triangles_bridge();
    ChargeLedger led = discharge(g, {2, 2, 3, 3, 2, 2}, 5);
    ComponentSumReport rep = component_sum_vs_phi(g, led);
    REQUIRE(rep.components.size() == 1);
    const ComponentPhi& cp = rep.components[0];
    CHECK(cp.phi.phi == Rat(4));
    CHECK(cp.bound == Rat(-3));
    CHECK(cp.ch_sum == Rat(-3));
    CHECK(cp.sum_le_bound);
    CHECK(rep.all_hold);
  }
  SUBCASE("vacuous when no vertex is low inside S0*") {
    ChargeLedger led = discharge(clique_multiple(6, 1), {4, 4, 4, 4, 4, 4}, 5);
    ComponentSumReport rep = component_sum_vs_phi(clique_multiple(6, 1), led);
    CHECK(rep.vacuous);
    CHECK(rep.all_hold);
    CHECK(rep.components.empty());
  }
  (void)pp;
}

TEST_CASE("render_ledger") {
  Multigraph g = clique_multiple(2, 4);
  ChargeLedger led = discharge(g, {4, 4}, 5);
  std::string text = render_ledger(g, led, check_cases(g, led));
  CHECK(text.find("tag") != std::string::npos);
  CHECK(text.find("L2") != std::string::npos);
  CHECK(text.find("total -1  rho_h(G) -1") != std::string::npos);
}

TEST_CASE("the rules conserve charge and respect every ceiling on random graphs") {
  std::mt19937 rng(271828);
  int done = 0;
  while (done < 25) {
    Multigraph g = support::random_connected_multigraph(rng, 7, 3);
    int k = std::uniform_int_distribution<int>(5, 7)(rng);
    std::vector<int> h(size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) {
      int off = std::uniform_int_distribution<int>(-1, 1)(rng);
      h[size_t(v)] = std::clamp(g.degree(v) + off, 0, k - 1);
    }
    if (!special_sets(g, h).defined) continue;
    ++done;
    ChargeLedger led = discharge(g, h, k);
    CHECK(led.total == led.rho_total);
    CHECK(check_cases(g, led).all_hold);
    CHECK(component_sum_vs_phi(g, led).all_hold);
  }
}
