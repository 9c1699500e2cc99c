#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpcolor {

// Conflict masks for a fixed cover (outside any enumeration).
ConflictTable conflict_table(const Cover& c);

struct SearchLimits {
  uint64_t max_covers = 10'000'000;
  uint64_t max_nodes = 100'000'000;
  int jobs = 1;
};

struct SolveOptions {
  SearchLimits limits;
  EnumOptions enum_opts;
  // Skip enumeration when a peeling order proves every cover colorable greedily.
  bool degeneracy_shortcut = true;
};

struct TransversalResult {
  enum Status { found, none, budget } status = none;
  std::vector<int> transversal;  // lexicographically least, when found
  uint64_t nodes = 0;
};
TransversalResult find_transversal(const Cover& c, uint64_t max_nodes = 100'000'000);

struct HColorability {
  enum Status { colorable, not_colorable, undecided } status = undecided;
  enum Method { degeneracy, enumeration } method = enumeration;
  std::optional<Cover> bad_cover;  // enumeration-least non-colorable cover
  uint64_t bad_cover_index = 0;
  uint64_t covers_checked = 0;
  uint64_t search_nodes = 0;
  std::string note;
};

// True DP h-colorability decision: every |L(v)| = h(v) cover has a transversal.
// Verdicts and certificates are independent of limits.jobs; budgets are accounted
// in fixed-size waves of the enumeration so parallel runs decide identically.
HColorability is_dp_h_colorable(const Multigraph& g, const std::vector<int>& h,
                                const SolveOptions& opts = {});

// h = degree function; pre: g connected.
HColorability is_dp_degree_colorable(const Multigraph& g, const SolveOptions& opts = {});

struct ChiDpResult {
  enum Status { determined, undecided, exceeded_max_k } status = undecided;
  int chi = 0;
  int stopped_at = 0;  // the k whose decision was cut off (undecided)
  std::vector<HColorability::Status> per_k;  // index k-1
};
ChiDpResult chi_dp(const Multigraph& g, int max_k, const SolveOptions& opts = {});

struct MinimalityReport {
  enum Status { h_minimal, colorable, has_noncolorable_subgraph, undecided } status = undecided;
  HColorability full;        // the decision on g itself
  int offending_pair = -1;   // pair slot whose deletion stays non-colorable
  std::optional<Cover> offending_bad_cover;
  std::string note;
};
// (a) g is not DP h-colorable, and (b) removing any single edge copy makes it
// DP h-colorable. Proper subgraphs reduce to single-copy deletions by monotonicity.
MinimalityReport is_h_minimal(const Multigraph& g, const std::vector<int>& h,
                              const SolveOptions& opts = {});

// DP k-criticality == h-minimality at h ≡ k-1; pre: g connected.
MinimalityReport is_dp_critical(const Multigraph& g, int k, const SolveOptions& opts = {});

struct Lemma31Report {
  enum Status { verified, failed, undecided } status = undecided;
  uint64_t covers_total = 0;
  uint64_t bad_count = 0;
  std::vector<uint64_t> bad_indices;
  Cover canonical;
  std::string note;
};
// For the stated family and list sizes, the non-colorable covers are exactly the
// relabelings of hard_cover(fam, t, q).
Lemma31Report verify_lemma31(HardFamily fam, int t, int q, const SolveOptions& opts = {});

}  // namespace dpcolor
