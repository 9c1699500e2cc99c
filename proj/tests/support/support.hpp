#pragma once

// Shared helpers for tests: independent brute-force oracles, small-graph
// enumeration with canonical dedup, a GDP-tree generator, and seeded random
// multigraphs. Everything here is deliberately naive so it cannot share bugs
// with the library's optimized paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/multigraph.hpp"

namespace support {

using dpcolor::Cover;
using dpcolor::EdgeSlot;
using dpcolor::Matching;
using dpcolor::Multigraph;

// Checks matchings directly, no bitmask machinery.
inline bool tuple_is_transversal(const Cover& c, const std::vector<int>& pick) {
  for (int p = 0; p < c.g.pair_count(); ++p) {
    const auto& e = c.g.pairs()[size_t(p)];
    for (const Matching& m : c.matchings[size_t(p)])
      for (auto [i, j] : m)
        if (pick[size_t(e.u)] == i && pick[size_t(e.v)] == j) return false;
  }
  return true;
}

inline long long count_transversals_brute(const Cover& c) {
  const int n = c.g.n();
  std::vector<int> pick(size_t(n), 0);
  long long count = 0;
  while (true) {
    bool valid = true;
    for (int v = 0; v < n && valid; ++v)
      if (c.list_sizes[size_t(v)] == 0) valid = false;
    if (!valid) return 0;
    if (tuple_is_transversal(c, pick)) ++count;
    int v = n - 1;
    while (v >= 0 && ++pick[size_t(v)] == c.list_sizes[size_t(v)]) pick[size_t(v--)] = 0;
    if (v < 0) break;
  }
  return count;
}

inline bool has_transversal_brute(const Cover& c) { return count_transversals_brute(c) > 0; }

// Proper list colorings where parallel edges add nothing beyond adjacency.
inline long long count_list_colorings(const Multigraph& g,
                                      const std::vector<std::vector<std::string>>& lists) {
  const int n = g.n();
  std::vector<int> pick(size_t(n), 0);
  long long count = 0;
  while (true) {
    for (int v = 0; v < n; ++v)
      if (lists[size_t(v)].empty()) return 0;
    bool ok = true;
    for (const auto& e : g.pairs())
      if (lists[size_t(e.u)][size_t(pick[size_t(e.u)])] ==
          lists[size_t(e.v)][size_t(pick[size_t(e.v)])]) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int v = n - 1;
    while (v >= 0 && ++pick[size_t(v)] == int(lists[size_t(v)].size())) pick[size_t(v--)] = 0;
    if (v < 0) break;
  }
  return count;
}

// Canonical code for multigraphs with n <= 8, multiplicity <= 3: two bits per
// pair, minimized over all vertex permutations.
inline uint64_t canon_code(const Multigraph& g) {
  const int n = g.n();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t(0);
  do {
    uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, bit += 2) {
        int m = g.multiplicity(std::min(perm[size_t(u)], perm[size_t(v)]),
                               std::max(perm[size_t(u)], perm[size_t(v)]));
        code |= uint64_t(m < 0 ? 0 : m) << bit;
      }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All labeled simple graphs on exactly n vertices.
inline std::vector<Multigraph> all_simple_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Multigraph> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
    std::vector<EdgeSlot> es;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.push_back({slots[i].first, slots[i].second, 1});
    out.push_back(Multigraph::build(n, std::move(es)));
  }
  return out;
}

// Connected simple graphs on 1..max_n vertices, one per isomorphism class.
inline std::vector<Multigraph> connected_simple_classes(int max_n) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::set<uint64_t> seen;
    for (Multigraph& g : all_simple_graphs(n)) {
      if (!g.connected()) continue;
      if (seen.insert(canon_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

// All multigraphs on exactly n labeled vertices with multiplicities 0..max_mult.
inline std::vector<Multigraph> all_multigraphs(int n, int max_mult) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Multigraph> out;
  std::vector<int> mult(slots.size(), 0);
  while (true) {
    std::vector<EdgeSlot> es;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mult[i] > 0) es.push_back({slots[i].first, slots[i].second, mult[i]});
    out.push_back(Multigraph::build(n, std::move(es)));
    size_t i = 0;
    while (i < slots.size() && ++mult[i] > max_mult) mult[i++] = 0;
    if (i == slots.size()) break;
  }
  return out;
}

// Every connected multigraph whose blocks are all K_t^s or C_t^s, up to
// isomorphism, grown by gluing one block at a time onto an existing vertex.
inline std::vector<Multigraph> gdp_trees(int max_n, int max_mult) {
  using dpcolor::clique_multiple;
  using dpcolor::cycle_multiple;
  std::vector<Multigraph> shapes;  // each block shape, rooted anywhere (transitive)
  for (int s = 1; s <= max_mult; ++s) {
    for (int t = 2; t <= max_n; ++t) shapes.push_back(clique_multiple(t, s));
    for (int t = 3; t <= max_n; ++t) shapes.push_back(cycle_multiple(t, s));
  }

  std::vector<Multigraph> out;
  std::set<uint64_t> seen;
  std::vector<Multigraph> frontier;
  Multigraph k1 = Multigraph::build(1, {});
  seen.insert(canon_code(k1));
  out.push_back(k1);
  frontier.push_back(k1);
  while (!frontier.empty()) {
    std::vector<Multigraph> next;
    for (const Multigraph& g : frontier)
      for (const Multigraph& blk : shapes) {
        if (g.n() + blk.n() - 1 > max_n) continue;
        for (int at = 0; at < g.n(); ++at) {
          // glue block vertex 0 onto g's vertex `at`; rest appended
          std::vector<EdgeSlot> es(g.pairs());
          for (const EdgeSlot& e : blk.pairs()) {
            auto map = [&](int x) { return x == 0 ? at : g.n() + x - 1; };
            int a = map(e.u), b = map(e.v);
            es.push_back({std::min(a, b), std::max(a, b), e.mult});
          }
          Multigraph ng = Multigraph::build(g.n() + blk.n() - 1, std::move(es));
          if (seen.insert(canon_code(ng)).second) {
            out.push_back(ng);
            next.push_back(std::move(ng));
          }
        }
      }
    frontier = std::move(next);
  }
  return out;
}

inline Multigraph random_connected_multigraph(std::mt19937& rng, int max_n, int max_mult) {
  while (true) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    std::vector<EdgeSlot> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int roll = std::uniform_int_distribution<int>(0, 9)(rng);
        int m = roll < 5 ? 0 : roll < 8 ? 1 : roll - 6;  // 0,0,0,0,0,1,1,1,2,3
        if (m > max_mult) m = max_mult;
        if (m > 0) es.push_back({u, v, m});
      }
    Multigraph g = Multigraph::build(n, std::move(es));
    if (g.connected()) return g;
  }
}

}  // namespace support
