#pragma once

#include <string>
#include <vector>

#include "dpcolor/multigraph.hpp"
#include "dpcolor/potential.hpp"
#include "dpcolor/rational.hpp"

namespace dpcolor {

// Lower bounds on edge counts of k-critical-type graphs, by source:
//   dirac        f(n,k) >= (k-1)n/2 + (k-3)/2                  (k >= 4, n >= k+2)
//   gallai       coefficient k-1 + (k-3)/(k^2-3)               (k >= 4, n >= k+2)
//   krivelevich  coefficient k-1 + (k-3)/(k^2-2k-1)            (k >= 4, n >= k+2)
//   ks           coefficient k-1 + 2(k-3)/(k^2+6k-9-6/(k-2))   (k >= 6, n >= k+2)
//   ky           f(n,k) >= (k-1+(k-3)/(k-1))n/2 - k(k-3)/(2(k-1))  (k >= 4, n >= k, n != k+1)
//   rabern       list version, three ranges of k               (k >= 4, n >= k+2)
//   dp           DP version: (k-1+1/λ)n/2 + 1/λ                (k >= 5, n >= k+2)
enum class BoundSource { dirac, gallai, krivelevich, ks, ky, rabern, dp };

// The n/2 coefficient (asymptotic average degree) of the bound.
Rat avg_degree_coefficient(BoundSource src, int k);

// The full lower bound on the edge count, exact.
Rat min_edges(BoundSource src, long long n, int k);

struct Table1Row {
  int k;
  Rat ga, ky, ra, dp;
};
std::vector<Table1Row> table1(const std::vector<int>& ks);
std::string render_table1(const std::vector<Table1Row>& rows);  // 4 decimals, truncated

// Where a graph stands against the DP edge bound for a given k.
struct AuditReport {
  int k = 0;
  long long lambda = 0;
  long long n = 0;
  long long edge_count = 0;
  enum Classification {
    exceptional_complete_kk,   // G = K_k
    exceptional_k2_4,          // k = 5, G = K_2^4
    exceptional_double_cycle,  // k = 5, G = C_n^2
    meets_edge_bound,
    below_edge_bound,
  } classification = below_edge_bound;
  Rat threshold;  // min_edges(dp, n, k), when n >= k+2
  bool threshold_defined = false;
  bool simple = false;
  long long rho = 0;  // ρ_h(G) with h ≡ k-1
  bool rho_at_most_minus2 = false;
  // For simple graphs: ρ_h(G) <= -2 and |E| >= threshold are equivalent.
  bool equivalence_checked = false;
  bool equivalence_holds = false;
};
AuditReport audit_graph(const Multigraph& g, int k);

}  // namespace dpcolor
