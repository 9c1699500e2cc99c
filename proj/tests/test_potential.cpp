#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "dpcolor/multigraph.hpp"
#include "dpcolor/potential.hpp"

using namespace dpcolor;

namespace {

std::vector<int> uniform(int n, int h) { return std::vector<int>(size_t(n), h); }

// every nonempty proper subset of {0..n-1}
template <typename F>
void for_each_proper_subset(int n, F f) {
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) vs.push_back(v);
    f(vs);
  }
}

}  // namespace

TEST_CASE("lambda and alpha") {
  struct Row {
    int k;
    long long lambda;
  };
  for (Row r : {Row{5, 6}, Row{6, 6}, Row{7, 6}, Row{8, 7}, Row{9, 7}, Row{10, 8}, Row{15, 10},
                Row{20, 12}}) {
    PotentialParams pp = potential_params(r.k);
    CHECK(pp.k == r.k);
    CHECK(pp.lambda == r.lambda);
    CHECK(pp.alpha == Rat(r.k - 2, 2 * r.k - 7));
  }
  CHECK(potential_params(5).alpha == Rat(1));
  CHECK(potential_params(6).alpha == Rat(4, 5));
  CHECK_THROWS_AS(potential_params(4), std::invalid_argument);
}

TEST_CASE("vertex and pair potentials at k = 5") {
  PotentialParams pp = potential_params(5);
  CHECK(rho_vertex(pp, 4) == 25);
  CHECK(rho_vertex(pp, 3) == 17);
  CHECK(rho_vertex(pp, 2) == 11);
  CHECK(rho_vertex(pp, 1) == 4);
  CHECK(rho_vertex(pp, 0) == -2);
  CHECK_THROWS_AS(rho_vertex(pp, 5), std::invalid_argument);
  CHECK_THROWS_AS(rho_vertex(pp, -1), std::invalid_argument);

  CHECK(rho_pair(pp, 0) == 0);
  CHECK(rho_pair(pp, 1) == -12);
  CHECK(rho_pair(pp, 2) == -25);
  CHECK(rho_pair(pp, 4) == -51);
  CHECK_THROWS_AS(rho_pair(pp, -1), std::invalid_argument);
}

TEST_CASE("graph potentials of the key hosts at k = 5, h = degrees-like caps") {
  PotentialParams pp = potential_params(5);
  auto rho = [&](const Multigraph& g) { return rho_graph(g, uniform(g.n(), 4), pp); };

  CHECK(rho(clique_multiple(5, 1)) == 5);
  CHECK(rho(clique_multiple(2, 4)) == -1);
  CHECK(rho(cycle_multiple(4, 2)) == 0);
  CHECK(rho(cycle_multiple(5, 2)) == 0);
  CHECK(rho(cycle_multiple(6, 2)) == 0);
  CHECK(rho(delete_edge_copy(clique_multiple(5, 1), 0, 1)) == 17);
  CHECK(rho(clique_multiple(2, 3)) == 12);
  CHECK(rho(delete_edge_copy(cycle_multiple(6, 2), 0, 1)) == 13);
  CHECK(rho(clique_multiple(6, 1)) == -30);
  CHECK(rho(clique_multiple(7, 1)) == -77);
}

TEST_CASE("rho over subsets") {
  PotentialParams pp = potential_params(5);
  Multigraph c42 = cycle_multiple(4, 2);
  std::vector<int> h = uniform(4, 4);
  CHECK(rho_set(c42, h, {}, pp) == 0);
  CHECK(rho_set(c42, h, {0, 1}, pp) == 25);   // doubled edge inside
  CHECK(rho_set(c42, h, {0, 2}, pp) == 50);   // no edge inside
  CHECK(rho_set(c42, h, {0, 1, 2}, pp) == 25);
  CHECK_THROWS_AS(rho_set(c42, h, {0, 0}, pp), std::invalid_argument);
  CHECK_THROWS_AS(rho_set(c42, h, {4}, pp), std::invalid_argument);
  CHECK_THROWS_AS(rho_set(c42, uniform(4, 5), {0}, pp), std::invalid_argument);
  CHECK_THROWS_AS(rho_set(c42, uniform(3, 4), {0}, pp), std::invalid_argument);
}

TEST_CASE("exceptional hosts") {
  CHECK(is_exceptional(clique_multiple(5, 1), 5));
  CHECK(is_exceptional(clique_multiple(3, 1), 7));
  CHECK(is_exceptional(Multigraph::build(1, {}), 5));
  CHECK(is_exceptional(clique_multiple(2, 4), 5));
  CHECK_FALSE(is_exceptional(clique_multiple(2, 4), 6));
  CHECK(is_exceptional(cycle_multiple(5, 2), 5));
  CHECK(is_exceptional(cycle_multiple(4, 2), 5));
  CHECK_FALSE(is_exceptional(cycle_multiple(5, 2), 6));
  CHECK_FALSE(is_exceptional(cycle_multiple(4, 1), 5));
  CHECK_FALSE(is_exceptional(clique_multiple(2, 3), 5));
  Multigraph diamond = delete_edge_copy(clique_multiple(4, 1), 0, 1);
  CHECK_FALSE(is_exceptional(diamond, 5));
  CHECK_THROWS_AS(is_exceptional(clique_multiple(3, 1), 4), std::invalid_argument);
}

TEST_CASE("submodularity") {
  PotentialParams pp = potential_params(5);
  Multigraph g = cycle_multiple(5, 2);
  std::vector<int> h = uniform(5, 4);
  CHECK(check_submodular(g, h, {0, 1}, {0, 1, 2, 3}, pp));  // nested: equality
  CHECK(check_submodular(g, h, {3, 1, 0}, {2, 4}, pp));     // unsorted inputs accepted
  for_each_proper_subset(5, [&](const std::vector<int>& a) {
    CHECK(check_submodular(g, h, a, {0, 2, 4}, pp));
  });
}

TEST_CASE("sigma and the Phi functional") {
  PotentialParams p5 = potential_params(5);
  CHECK(sigma_h(clique_multiple(4, 1), uniform(4, 3)) == 0);
  Multigraph c4 = cycle_multiple(4, 1);
  CHECK(sigma_h(c4, {2, 2, 2, 3}) == 1);

  SUBCASE("golden values") {
    CHECK(phi(Multigraph::build(1, {}), {3}, p5).phi == Rat(4));
    Multigraph k2 = clique_multiple(2, 1);
    CHECK(phi(k2, {3, 3}, p5).phi == Rat(6));
    CHECK(phi(k2, {4, 4}, p5).phi == Rat(4));
    Multigraph p3 = Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(phi(p3, {3, 3, 3}, p5).phi == Rat(8));
    CHECK(phi(Multigraph::build(1, {}), {3}, potential_params(6)).phi == Rat(17, 5));
    CHECK(phi(clique_multiple(3, 1), {4, 4, 4}, potential_params(7)).phi == Rat(51, 7));
  }

  SUBCASE("thresholds") {
    CHECK(phi(Multigraph::build(1, {}), {3}, p5).threshold == Rat(2));
    CHECK(phi(Multigraph::build(1, {}), {3}, potential_params(6)).threshold == Rat(9, 5));
    CHECK(phi(Multigraph::build(1, {}), {3}, potential_params(7)).threshold == Rat(12, 7));
  }

  SUBCASE("hypothesis flags") {
    PhiReport ok = phi(clique_multiple(2, 1), {3, 3}, p5);
    CHECK(ok.hypotheses_met);
    CHECK(ok.exceeds);

    // 4-regular blocks are forbidden at k = 5
    PhiReport c42 = phi(cycle_multiple(4, 2), uniform(4, 4), p5);
    CHECK(c42.phi == Rat(0));
    CHECK(c42.gdp_tree);
    CHECK(c42.h_in_range);
    CHECK(c42.h_at_least_degree);
    CHECK_FALSE(c42.no_forbidden_regular_blocks);
    CHECK_FALSE(c42.hypotheses_met);
    CHECK_FALSE(c42.exceeds);

    PhiReport k5 = phi(clique_multiple(5, 1), uniform(5, 4), p5);
    CHECK(k5.phi == Rat(-5));
    CHECK_FALSE(k5.no_forbidden_regular_blocks);

    // 3-regular block: forbidden because 3 = k - 2
    PhiReport k4 = phi(clique_multiple(4, 1), uniform(4, 4), p5);
    CHECK_FALSE(k4.no_forbidden_regular_blocks);

    PhiReport low = phi(clique_multiple(2, 1), {2, 3}, p5);
    CHECK_FALSE(low.h_in_range);
    CHECK_FALSE(low.hypotheses_met);

    PhiReport deg = phi(clique_multiple(2, 4), {3, 3}, p5);
    CHECK_FALSE(deg.h_at_least_degree);  // degree 4 > h = 3

    Multigraph diamond = delete_edge_copy(clique_multiple(4, 1), 0, 1);
    CHECK_FALSE(phi(diamond, uniform(4, 4), p5).gdp_tree);
  }

  CHECK_THROWS_AS(phi(Multigraph::build(2, {}), {3, 3}, p5), std::invalid_argument);
  CHECK_THROWS_AS(phi(clique_multiple(2, 1), {3}, p5), std::invalid_argument);
}

TEST_CASE("clique deletion raises subset potentials uniformly") {
  // for F = K_k with h = k-1 everywhere, every nonempty proper induced subgraph
  // of F minus an edge sits at least (k-3)(lambda-1) - 2 above rho(F minus an edge)
  for (int k : {5, 6, 7}) {
    PotentialParams pp = potential_params(k);
    Multigraph fm = delete_edge_copy(clique_multiple(k, 1), 0, 1);
    std::vector<int> h = uniform(k, k - 1);
    long long base = rho_graph(fm, h, pp) + (k - 3) * (pp.lambda - 1) - 2;
    long long min_seen = 1'000'000;
    for_each_proper_subset(k, [&](const std::vector<int>& vs) {
      long long r = rho_set(fm, h, vs, pp);
      CHECK(r >= base);
      min_seen = std::min(min_seen, r);
    });
    CHECK(min_seen == base);  // attained by a single vertex
  }
}

TEST_CASE("exceptional hosts keep proper subsets 8 above after one deletion at k = 5") {
  PotentialParams pp = potential_params(5);
  std::vector<Multigraph> hosts{clique_multiple(5, 1), clique_multiple(2, 4)};
  for (int n = 3; n <= 6; ++n) hosts.push_back(cycle_multiple(n, 2));
  for (const Multigraph& f : hosts) {
    Multigraph fm = delete_edge_copy(f, f.pairs()[0].u, f.pairs()[0].v);
    std::vector<int> h = uniform(f.n(), 4);
    long long floor_val = rho_graph(fm, h, pp) + 8;
    for_each_proper_subset(f.n(), [&](const std::vector<int>& vs) {
      CHECK(rho_set(fm, h, vs, pp) >= floor_val);
    });
  }
}
