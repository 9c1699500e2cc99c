#pragma once

#include <vector>

#include "dpcolor/multigraph.hpp"
#include "dpcolor/rational.hpp"

namespace dpcolor {

// λ = ceil((k^2 - 7) / (2k - 7)), α = (k - 2) / (2k - 7); defined for k >= 5.
struct PotentialParams {
  int k = 0;
  long long lambda = 0;
  Rat alpha;
};
PotentialParams potential_params(int k);

// Vertex potential: hλ+1 when h = k-1, hλ-1 when 2 <= h <= k-2, hλ-2 when h <= 1.
long long rho_vertex(const PotentialParams& pp, int h);
// Pair potential: 0 for non-adjacent, else 1 - (2λ+1)s.
long long rho_pair(const PotentialParams& pp, int s);

// ρ_{G,h}(A) = Σ_{v in A} ρ(v) + Σ_{pairs inside A} ρ(uv). A: sorted vertex subset.
long long rho_set(const Multigraph& g, const std::vector<int>& h, const std::vector<int>& A,
                  const PotentialParams& pp);
long long rho_graph(const Multigraph& g, const std::vector<int>& h, const PotentialParams& pp);

// The exceptional hosts: complete simple graphs, plus K_2^4 and double cycles when k = 5.
bool is_exceptional(const Multigraph& g, int k);

// ρ(U1 ∪ U2) + ρ(U1 ∩ U2) <= ρ(U1) + ρ(U2)
bool check_submodular(const Multigraph& g, const std::vector<int>& h, const std::vector<int>& U1,
                      const std::vector<int>& U2, const PotentialParams& pp);

// σ_h(T) = Σ (h(v) - d_T(v))
long long sigma_h(const Multigraph& t, const std::vector<int>& h);

// Φ_k(T) = α σ_h(T) + m(T) + |{v : h(v) < k-1}| - |{v : h(v) = k-1}|, with a report
// on the hypotheses under which Φ_k(T) > 1 + α is guaranteed.
struct PhiReport {
  Rat phi;
  Rat threshold;  // 1 + α
  bool exceeds = false;
  bool h_in_range = false;         // 3 <= h(v) <= k-1 everywhere
  bool h_at_least_degree = false;  // h(v) >= d_T(v) everywhere
  bool gdp_tree = false;
  bool no_forbidden_regular_blocks = false;  // no (k-1)- or (k-2)-regular block
  bool hypotheses_met = false;
};
PhiReport phi(const Multigraph& t, const std::vector<int>& h, const PotentialParams& pp);

}  // namespace dpcolor
