#pragma once

#include <string>
#include <vector>

#include "dpcolor/multigraph.hpp"
#include "dpcolor/potential.hpp"

namespace dpcolor {

// S₀* and its companions. With no cut edges S₀* = V(G); otherwise it is the
// smallest pendent edge-block other than a K_2 (fewest vertices, then fewest
// edges, then least vertex set), attached by the unique edge x0–y0.
struct SpecialSets {
  bool defined = false;
  std::string reason;    // which rule picked S₀*, or why it is undefined
  std::vector<int> s0;   // sorted
  int x0 = -1, y0 = -1;  // attachment edge, x0 inside S₀*; -1 when S₀* = V(G)
  std::vector<int> low;  // vertices with h(v) = d(v), sorted
  std::vector<int> b0;   // low ∩ s0
};
// pre: g connected.
SpecialSets special_sets(const Multigraph& g, const std::vector<int>& h);

struct VertexCharge {
  int v = 0;
  int h = 0;
  int d = 0;
  std::string tag;   // N1 N2 N3 L1 L2 H outside
  Rat initial;       // ρ_h(v)
  Rat after_pairs;   // ρ_h(v) - λd(v) - (d(v) - ~d(v))/2
  Rat final_charge;  // ch*(v)
};

struct ChargeLedger {
  PotentialParams params;
  SpecialSets sets;
  std::vector<VertexCharge> vertices;
  std::vector<Rat> pair_initial;  // 1 - (2λ+1)s per pair; every final pair charge is 0
  Rat total;                      // Σ ch*(v)
  Rat rho_total;                  // ρ_h(G), computed independently of the rules
};

// The three rules: (1) each vertex starts at ρ_h(v) and each adjacent pair at
// -s(2λ+1)+1; (2) each pair takes (s(2λ+1)-1)/2 from both endpoints, ending at 0;
// (3) each non-low u ∈ S₀* takes α along every edge to a low v ∈ S₀*.
// Throws when S₀* is undefined. All arithmetic exact.
ChargeLedger discharge(const Multigraph& g, const std::vector<int>& h, int k);

struct CaseRow {
  int v = 0;
  std::string tag;
  Rat final_charge;
  bool has_bound = false;
  Rat bound;
  bool holds = true;
  std::string note;
};
struct CaseReport {
  std::vector<CaseRow> rows;
  bool all_hold = true;
};
// Checks the per-case ceilings on ch*(v) for v ∈ S₀*; these follow from the rules
// alone because rule 3 hands a vertex at most αd(v):
//   N1 (non-low, d ≤ k-1): ch* ≤ λ(h-d) - 1 + αd, and the ceiling itself is < -1
//   N2 (non-low, d = k):   ch* ≤ -λ + 1 + αk ≤ 0
//   N3 (non-low, d ≥ k+1): ch* ≤ -2λ + 1 + α(k+1) < -1
//   L1 (low, h = d ≤ k-2): ch* ≤ -1 - (d-~d)/2 - α(d_{S₀*}(v) - d_{b₀}(v))
//   L2 (low, h = d = k-1): ch* = 1 - (d-~d)/2 - α d_{S₀*}(v) + α d_{b₀}(v), exactly
// Tag H (h > d) and vertices outside S₀* carry no checked bound.
CaseReport check_cases(const Multigraph& g, const ChargeLedger& led);

struct ComponentPhi {
  std::vector<int> vertices;
  Rat ch_sum;
  Rat bound;  // -Φ_k(B) + α
  bool sum_le_bound = false;
  bool strict_ok = false;  // ch_sum < -1 (binding only when phi.hypotheses_met)
  PhiReport phi;
};
struct ComponentSumReport {
  bool vacuous = false;  // b0 empty
  std::vector<ComponentPhi> components;
  bool all_hold = true;
};
// For each component B of G[b₀]: Σ_{v∈B} ch*(v) ≤ -Φ_k(B) + α holds by the rules
// (pendency gives d_{S₀*}(v) = h(v) - [v = x₀*] for low v); the strict < -1 is
// checked whenever B meets the Φ hypotheses.
ComponentSumReport component_sum_vs_phi(const Multigraph& g, const ChargeLedger& led);

// Aligned text table: v, h, d, tag, initial, after-pairs, final, bound.
std::string render_ledger(const Multigraph& g, const ChargeLedger& led, const CaseReport& cases);

}  // namespace dpcolor
