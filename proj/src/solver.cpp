#include "dpcolor/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace dpcolor {

namespace {

uint64_t full_mask(int bits) {
  return bits >= 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
}

// Static search order 0..n-1. Every slot is stored with u < v, so when u is
// assigned only the fwd masks are ever needed to prune open domains.
struct Plan {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> forward;  // u -> [(v, slot)]
  std::vector<uint64_t> init;

  explicit Plan(const ConflictTable& ct) : n(ct.n), forward(size_t(ct.n)), init(size_t(ct.n)) {
    for (size_t p = 0; p < ct.ends.size(); ++p)
      forward[size_t(ct.ends[p].first)].push_back({ct.ends[p].second, int(p)});
    for (int v = 0; v < n; ++v) init[size_t(v)] = full_mask(ct.sizes[size_t(v)]);
  }
};

enum class DfsOut { found, exhausted, budget };

// First-found transversal is lexicographically least: vertices in id order,
// colors ascending. nodes counts attempted color assignments.
DfsOut dfs_solve(const Plan& plan, const ConflictTable& ct, uint64_t max_nodes,
                 uint64_t& nodes, std::vector<int>* witness) {
  const int n = plan.n;
  if (n == 0) {
    if (witness) witness->clear();
    return DfsOut::found;
  }
  std::vector<uint64_t> dom(size_t(n + 1) * size_t(n));
  std::copy(plan.init.begin(), plan.init.end(), dom.begin());
  std::vector<uint64_t> iter(size_t(n), 0);
  std::vector<int> choice(size_t(n), -1);
  int d = 0;
  iter[0] = dom[0];
  while (true) {
    if (iter[size_t(d)] == 0) {
      if (d == 0) return DfsOut::exhausted;
      --d;
      continue;
    }
    const int c = std::countr_zero(iter[size_t(d)]);
    iter[size_t(d)] &= iter[size_t(d)] - 1;
    if (++nodes > max_nodes) return DfsOut::budget;
    const uint64_t* cur = &dom[size_t(d) * size_t(n)];
    uint64_t* nxt = &dom[(size_t(d) + 1) * size_t(n)];
    std::copy(cur, cur + n, nxt);
    bool dead = false;
    for (auto [w, p] : plan.forward[size_t(d)]) {
      nxt[w] &= ~ct.slots[size_t(p)].fwd[size_t(c)];
      if (nxt[w] == 0) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    choice[size_t(d)] = c;
    if (d + 1 == n) {
      if (witness) *witness = choice;
      return DfsOut::found;
    }
    ++d;
    iter[size_t(d)] = nxt[d];
  }
}

// Peel vertices whose list exceeds their remaining degree; if everything peels,
// reverse-order greedy coloring succeeds against every cover.
bool peels_completely(const Multigraph& g, const std::vector<int>& h) {
  const int n = g.n();
  std::vector<int> deg = g.degrees();
  std::vector<char> gone(size_t(n), 0);
  int removed = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (gone[size_t(v)] || h[size_t(v)] <= deg[size_t(v)]) continue;
      gone[size_t(v)] = 1;
      ++removed;
      for (auto [w, m] : g.neighbors(v))
        if (!gone[size_t(w)]) deg[size_t(w)] -= m;
      progress = true;
    }
  }
  return removed == n;
}

struct ScanResult {
  HColorability::Status status = HColorability::undecided;
  uint64_t bad_index = 0;
  uint64_t covers_checked = 0;
  uint64_t nodes = 0;
  std::string note;
};

constexpr uint64_t kWave = 4096;

// Scans covers in waves of kWave indexes. Waves always run to completion and
// per-solve node caps are snapshotted at wave starts, so node totals, verdicts
// and certificates do not depend on the number of worker threads.
ScanResult scan_space(const CoverSpace& space, const SearchLimits& lim) {
  const ConflictTable proto = space.make_table();
  const Plan plan(proto);
  const uint64_t total = space.count();
  const int jobs = std::max(1, lim.jobs);

  ScanResult r;
  uint64_t done = 0;
  while (done < total) {
    if (done >= lim.max_covers) {
      r.status = HColorability::undecided;
      r.covers_checked = done;
      r.note = "cover budget exhausted";
      return r;
    }
    if (r.nodes >= lim.max_nodes) {
      r.status = HColorability::undecided;
      r.covers_checked = done;
      r.note = "node budget exhausted";
      return r;
    }
    const uint64_t wave_end = std::min(total, done + kWave);
    const uint64_t solve_cap = lim.max_nodes - r.nodes;

    uint64_t wave_nodes = 0;
    uint64_t bad_at = ~uint64_t(0), capped_at = ~uint64_t(0);
    auto run_stripe = [&](int t, uint64_t& nodes_out, uint64_t& bad_out, uint64_t& cap_out) {
      ConflictTable ct = proto;
      std::vector<int> scratch;
      for (uint64_t i = done + uint64_t(t); i < wave_end; i += uint64_t(jobs)) {
        space.fill_conflicts(i, ct, scratch);
        uint64_t used = 0;
        DfsOut out = dfs_solve(plan, ct, solve_cap, used, nullptr);
        nodes_out += used;
        if (out == DfsOut::exhausted) bad_out = std::min(bad_out, i);
        if (out == DfsOut::budget) cap_out = std::min(cap_out, i);
      }
    };
    if (jobs == 1) {
      run_stripe(0, wave_nodes, bad_at, capped_at);
    } else {
      std::vector<uint64_t> tn(size_t(jobs), 0), tb(size_t(jobs), ~uint64_t(0)),
          tc(size_t(jobs), ~uint64_t(0));
      std::vector<std::thread> pool;
      pool.reserve(size_t(jobs));
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back(run_stripe, t, std::ref(tn[size_t(t)]), std::ref(tb[size_t(t)]),
                          std::ref(tc[size_t(t)]));
      for (auto& th : pool) th.join();
      for (int t = 0; t < jobs; ++t) {
        wave_nodes += tn[size_t(t)];
        bad_at = std::min(bad_at, tb[size_t(t)]);
        capped_at = std::min(capped_at, tc[size_t(t)]);
      }
    }
    r.nodes += wave_nodes;
    done = wave_end;
    if (bad_at != ~uint64_t(0)) {
      r.status = HColorability::not_colorable;
      r.bad_index = bad_at;
      r.covers_checked = done;
      if (capped_at < bad_at)
        r.note = "a lower-index solve hit the node cap; bad cover may not be enumeration-least";
      return r;
    }
    if (capped_at != ~uint64_t(0)) {
      r.status = HColorability::undecided;
      r.covers_checked = done;
      r.note = "node budget exhausted inside a cover solve";
      return r;
    }
  }
  r.status = HColorability::colorable;
  r.covers_checked = total;
  return r;
}

void check_h(const Multigraph& g, const std::vector<int>& h, const char* who) {
  if (int(h.size()) != g.n())
    throw std::invalid_argument(std::string(who) + ": h must assign one size per vertex");
  for (int v : h)
    if (v < 0) throw std::invalid_argument(std::string(who) + ": list sizes must be nonnegative");
}

}  // namespace

ConflictTable conflict_table(const Cover& c) {
  ConflictTable ct;
  ct.n = c.g.n();
  ct.sizes = c.list_sizes;
  for (int s : ct.sizes)
    if (s > 64) throw BudgetExceeded("conflict_table: list sizes above 64 are unsupported");
  ct.slots.resize(size_t(c.g.pair_count()));
  ct.ends.resize(size_t(c.g.pair_count()));
  for (int p = 0; p < c.g.pair_count(); ++p) {
    const auto& e = c.g.pairs()[size_t(p)];
    ct.ends[size_t(p)] = {e.u, e.v};
    auto& sm = ct.slots[size_t(p)];
    sm.fwd.assign(size_t(ct.sizes[size_t(e.u)]), 0);
    sm.bwd.assign(size_t(ct.sizes[size_t(e.v)]), 0);
    for (const Matching& m : c.matchings[size_t(p)])
      for (auto [i, j] : m) {
        sm.fwd[size_t(i)] |= uint64_t(1) << j;
        sm.bwd[size_t(j)] |= uint64_t(1) << i;
      }
  }
  return ct;
}

TransversalResult find_transversal(const Cover& c, uint64_t max_nodes) {
  const ConflictTable ct = conflict_table(c);
  const Plan plan(ct);
  TransversalResult r;
  switch (dfs_solve(plan, ct, max_nodes, r.nodes, &r.transversal)) {
    case DfsOut::found: r.status = TransversalResult::found; break;
    case DfsOut::exhausted: r.status = TransversalResult::none; break;
    case DfsOut::budget: r.status = TransversalResult::budget; break;
  }
  return r;
}

HColorability is_dp_h_colorable(const Multigraph& g, const std::vector<int>& h,
                                const SolveOptions& opts) {
  check_h(g, h, "is_dp_h_colorable");
  HColorability r;
  if (opts.degeneracy_shortcut && peels_completely(g, h)) {
    r.status = HColorability::colorable;
    r.method = HColorability::degeneracy;
    r.note = "peeling order certifies every cover greedily colorable";
    return r;
  }
  try {
    CoverSpace space(g, h, opts.enum_opts);
    ScanResult sr = scan_space(space, opts.limits);
    r.status = sr.status;
    r.covers_checked = sr.covers_checked;
    r.search_nodes = sr.nodes;
    r.note = sr.note;
    if (sr.status == HColorability::not_colorable) {
      r.bad_cover_index = sr.bad_index;
      r.bad_cover = space.materialize(sr.bad_index);
    }
  } catch (const BudgetExceeded& e) {
    r.status = HColorability::undecided;
    r.note = e.what();
  }
  return r;
}

HColorability is_dp_degree_colorable(const Multigraph& g, const SolveOptions& opts) {
  if (!g.connected())
    throw std::invalid_argument("is_dp_degree_colorable: graph must be connected");
  return is_dp_h_colorable(g, g.degrees(), opts);
}

ChiDpResult chi_dp(const Multigraph& g, int max_k, const SolveOptions& opts) {
  if (max_k < 1) throw std::invalid_argument("chi_dp: max_k must be at least 1");
  ChiDpResult r;
  if (g.n() == 0) {
    r.status = ChiDpResult::determined;
    r.chi = 0;
    return r;
  }
  for (int k = 1; k <= max_k; ++k) {
    auto hc = is_dp_h_colorable(g, std::vector<int>(size_t(g.n()), k), opts);
    r.per_k.push_back(hc.status);
    if (hc.status == HColorability::colorable) {
      r.status = ChiDpResult::determined;
      r.chi = k;
      return r;
    }
    if (hc.status == HColorability::undecided) {
      r.status = ChiDpResult::undecided;
      r.stopped_at = k;
      return r;
    }
  }
  r.status = ChiDpResult::exceeded_max_k;
  r.stopped_at = max_k;
  return r;
}

MinimalityReport is_h_minimal(const Multigraph& g, const std::vector<int>& h,
                              const SolveOptions& opts) {
  check_h(g, h, "is_h_minimal");
  MinimalityReport r;
  r.full = is_dp_h_colorable(g, h, opts);
  if (r.full.status == HColorability::colorable) {
    r.status = MinimalityReport::colorable;
    r.note = "the graph itself is DP h-colorable";
    return r;
  }
  if (r.full.status == HColorability::undecided) {
    r.status = MinimalityReport::undecided;
    r.note = "full graph undecided: " + r.full.note;
    return r;
  }
  // Every proper subgraph with the same vertex set sits under some single-copy
  // deletion, and colorability is monotone under edge removal.
  for (int p = 0; p < g.pair_count(); ++p) {
    const auto& e = g.pairs()[size_t(p)];
    auto hc = is_dp_h_colorable(delete_edge_copy(g, e.u, e.v), h, opts);
    if (hc.status == HColorability::colorable) continue;
    r.offending_pair = p;
    if (hc.status == HColorability::not_colorable) {
      r.status = MinimalityReport::has_noncolorable_subgraph;
      r.offending_bad_cover = hc.bad_cover;
      r.note = "still non-colorable after deleting one copy of (" + std::to_string(e.u) + "," +
               std::to_string(e.v) + ")";
    } else {
      r.status = MinimalityReport::undecided;
      r.note = "undecided after deleting one copy of (" + std::to_string(e.u) + "," +
               std::to_string(e.v) + "): " + hc.note;
    }
    return r;
  }
  r.status = MinimalityReport::h_minimal;
  return r;
}

MinimalityReport is_dp_critical(const Multigraph& g, int k, const SolveOptions& opts) {
  if (k < 2) throw std::invalid_argument("is_dp_critical: k must be at least 2");
  if (!g.connected()) throw std::invalid_argument("is_dp_critical: graph must be connected");
  return is_h_minimal(g, std::vector<int>(size_t(g.n()), k - 1), opts);
}

Lemma31Report verify_lemma31(HardFamily fam, int t, int q, const SolveOptions& opts) {
  Lemma31Report r;
  r.canonical = hard_cover(fam, t, q);
  auto tv = find_transversal(r.canonical, opts.limits.max_nodes);
  if (tv.status == TransversalResult::found) {
    r.status = Lemma31Report::failed;
    r.note = "the stated hard cover admits a transversal";
    return r;
  }
  if (tv.status == TransversalResult::budget) {
    r.status = Lemma31Report::undecided;
    r.note = "node budget on the stated hard cover";
    return r;
  }
  try {
    CoverSpace space(r.canonical.g, r.canonical.list_sizes, opts.enum_opts);
    r.covers_total = space.count();
    if (r.covers_total > opts.limits.max_covers) {
      r.status = Lemma31Report::undecided;
      r.note = "cover budget exhausted";
      return r;
    }
    const ConflictTable proto = space.make_table();
    const Plan plan(proto);
    ConflictTable ct = proto;
    std::vector<int> scratch;
    uint64_t nodes = 0;
    for (uint64_t i = 0; i < r.covers_total; ++i) {
      space.fill_conflicts(i, ct, scratch);
      uint64_t used = 0;
      DfsOut out = dfs_solve(plan, ct, opts.limits.max_nodes - nodes, used, nullptr);
      nodes += used;
      if (out == DfsOut::budget) {
        r.status = Lemma31Report::undecided;
        r.note = "node budget exhausted";
        return r;
      }
      if (out == DfsOut::exhausted) {
        ++r.bad_count;
        if (r.bad_indices.size() < 64) r.bad_indices.push_back(i);
        if (!covers_isomorphic(space.materialize(i), r.canonical)) {
          r.status = Lemma31Report::failed;
          r.note = "bad cover at index " + std::to_string(i) +
                   " is not a relabeling of the stated one";
          return r;
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    r.status = Lemma31Report::undecided;
    r.note = e.what();
    return r;
  }
  if (r.bad_count == 0) {
    r.status = Lemma31Report::failed;
    r.note = "no non-colorable cover exists at these list sizes";
  } else {
    r.status = Lemma31Report::verified;
  }
  return r;
}

}  // namespace dpcolor
