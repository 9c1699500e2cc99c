#include "dpcolor/potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpcolor {

namespace {

void validate_h(const Multigraph& g, const std::vector<int>& h, int k) {
  if (int(h.size()) != g.n()) throw std::invalid_argument("potential: h has wrong length");
  for (int x : h)
    if (x < 0 || x > k - 1) throw std::invalid_argument("potential: h values must lie in [0, k-1]");
}

}  // namespace

PotentialParams potential_params(int k) {
  if (k < 5) throw std::invalid_argument("potential: k must be >= 5");
  const long long num = (long long)k * k - 7, den = 2LL * k - 7;
  return {k, (num + den - 1) / den, Rat(k - 2, den)};
}

long long rho_vertex(const PotentialParams& pp, int h) {
  if (h < 0 || h > pp.k - 1) throw std::invalid_argument("potential: h value out of range");
  if (h == pp.k - 1) return h * pp.lambda + 1;
  if (h >= 2) return h * pp.lambda - 1;
  return h * pp.lambda - 2;
}

long long rho_pair(const PotentialParams& pp, int s) {
  if (s < 0) throw std::invalid_argument("potential: negative multiplicity");
  return s == 0 ? 0 : 1 - (2 * pp.lambda + 1) * s;
}

long long rho_set(const Multigraph& g, const std::vector<int>& h, const std::vector<int>& A,
                  const PotentialParams& pp) {
  validate_h(g, h, pp.k);
  std::vector<bool> in(g.n(), false);
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i] < 0 || A[i] >= g.n()) throw std::invalid_argument("potential: subset vertex out of range");
    if (in[A[i]]) throw std::invalid_argument("potential: repeated subset vertex");
    in[A[i]] = true;
  }
  long long total = 0;
  for (int v : A) total += rho_vertex(pp, h[v]);
  for (const auto& e : g.pairs())
    if (in[e.u] && in[e.v]) total += rho_pair(pp, e.mult);
  return total;
}

long long rho_graph(const Multigraph& g, const std::vector<int>& h, const PotentialParams& pp) {
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return rho_set(g, h, all, pp);
}

bool is_exceptional(const Multigraph& g, int k) {
  if (k < 5) throw std::invalid_argument("potential: k must be >= 5");
  const int n = g.n();
  if (g.is_simple() && g.pair_count() == n * (n - 1) / 2) return true;  // complete
  if (k != 5) return false;
  if (n == 2 && g.multiplicity(0, 1) == 4) return true;  // K_2^4
  if (n >= 3 && g.pair_count() == n) {                   // double cycle?
    bool dc = true;
    for (const auto& e : g.pairs()) dc = dc && e.mult == 2;
    for (int v = 0; dc && v < n; ++v) dc = g.skeleton_degree(v) == 2;
    if (dc && g.connected()) return true;
  }
  return false;
}

bool check_submodular(const Multigraph& g, const std::vector<int>& h, const std::vector<int>& U1,
                      const std::vector<int>& U2, const PotentialParams& pp) {
  std::vector<int> a(U1), b(U2);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> uni, inter;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  return rho_set(g, h, uni, pp) + rho_set(g, h, inter, pp) <=
         rho_set(g, h, a, pp) + rho_set(g, h, b, pp);
}

long long sigma_h(const Multigraph& t, const std::vector<int>& h) {
  long long s = 0;
  for (int v = 0; v < t.n(); ++v) s += h[v] - t.degree(v);
  return s;
}

PhiReport phi(const Multigraph& t, const std::vector<int>& h, const PotentialParams& pp) {
  if (int(h.size()) != t.n()) throw std::invalid_argument("phi: h has wrong length");
  if (!t.connected()) throw std::invalid_argument("phi: graph must be connected");
  PhiReport r;
  long long high = 0, low = 0;
  for (int v = 0; v < t.n(); ++v) (h[v] == pp.k - 1 ? high : low) += 1;
  r.phi = pp.alpha * sigma_h(t, h) + Rat(t.excess()) + Rat(low - high);
  r.threshold = 1 + pp.alpha;
  r.exceeds = r.phi > r.threshold;

  r.h_in_range = true;
  r.h_at_least_degree = true;
  for (int v = 0; v < t.n(); ++v) {
    r.h_in_range = r.h_in_range && h[v] >= 3 && h[v] <= pp.k - 1;
    r.h_at_least_degree = r.h_at_least_degree && h[v] >= t.degree(v);
  }
  auto cls = classify_gdp(t);
  r.gdp_tree = cls.all_gdp();
  r.no_forbidden_regular_blocks = true;
  for (const auto& tag : cls.block_tags) {
    int reg = 0;  // blocks of a GDP-tree are regular: s(t-1) for cliques, 2s for cycles
    if (tag.kind == BlockTag::clique_multiple) reg = tag.s * (tag.t - 1);
    else if (tag.kind == BlockTag::cycle_multiple) reg = 2 * tag.s;
    else continue;
    if (reg == pp.k - 1 || reg == pp.k - 2) r.no_forbidden_regular_blocks = false;
  }
  r.hypotheses_met =
      r.h_in_range && r.h_at_least_degree && r.gdp_tree && r.no_forbidden_regular_blocks;
  return r;
}

}  // namespace dpcolor
