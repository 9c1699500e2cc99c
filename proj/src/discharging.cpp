#include "dpcolor/discharging.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dpcolor {

namespace {

void check_inputs(const Multigraph& g, const std::vector<int>& h, const char* who) {
  if (!g.connected()) throw std::invalid_argument(std::string(who) + ": graph must be connected");
  if (int(h.size()) != g.n())
    throw std::invalid_argument(std::string(who) + ": h must assign one value per vertex");
}

// degree of v counted toward vertices flagged in `in`
int degree_into(const Multigraph& g, int v, const std::vector<char>& in) {
  int d = 0;
  for (auto [w, m] : g.neighbors(v))
    if (in[size_t(w)]) d += m;
  return d;
}

}  // namespace

SpecialSets special_sets(const Multigraph& g, const std::vector<int>& h) {
  check_inputs(g, h, "special_sets");
  SpecialSets s;
  for (int v = 0; v < g.n(); ++v)
    if (h[size_t(v)] == g.degree(v)) s.low.push_back(v);

  EdgeBlockDecomposition eb = edge_blocks(g);
  if (eb.cut_edges.empty()) {
    s.defined = true;
    s.reason = "no cut edges; S0* = V(G)";
    s.s0.resize(size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) s.s0[size_t(v)] = v;
    s.b0 = s.low;
    return s;
  }

  int best = -1;
  long long best_edges = 0;
  for (size_t i = 0; i < eb.edge_blocks.size(); ++i) {
    if (!eb.pendent[i] || eb.is_cut_edge_block[i]) continue;
    long long edges = induced_subgraph(g, eb.edge_blocks[i]).edge_count();
    if (best < 0 ||
        std::tuple(eb.edge_blocks[i].size(), edges, eb.edge_blocks[i]) <
            std::tuple(eb.edge_blocks[size_t(best)].size(), best_edges,
                       eb.edge_blocks[size_t(best)])) {
      best = int(i);
      best_edges = edges;
    }
  }
  if (best < 0) {
    s.reason = "undefined: every pendent edge-block is a K_2";
    return s;
  }
  s.defined = true;
  s.reason = "smallest pendent edge-block distinct from K_2";
  s.s0 = eb.edge_blocks[size_t(best)];
  std::vector<char> in(size_t(g.n()), 0);
  for (int v : s.s0) in[size_t(v)] = 1;
  for (int v : s.s0)
    for (auto [w, m] : g.neighbors(v))
      if (!in[size_t(w)]) {
        s.x0 = v;
        s.y0 = w;
      }
  for (int v : s.low)
    if (in[size_t(v)]) s.b0.push_back(v);
  return s;
}

ChargeLedger discharge(const Multigraph& g, const std::vector<int>& h, int k) {
  check_inputs(g, h, "discharge");
  ChargeLedger led;
  led.params = potential_params(k);
  for (int v = 0; v < g.n(); ++v)
    if (h[size_t(v)] < 0 || h[size_t(v)] > k - 1)
      throw std::invalid_argument("discharge: h(v) must lie in [0, k-1]");
  led.sets = special_sets(g, h);
  if (!led.sets.defined) throw std::runtime_error("discharge: S0* " + led.sets.reason);

  const long long lam = led.params.lambda;
  const Rat alpha = led.params.alpha;
  std::vector<char> in_s0(size_t(g.n()), 0), is_low(size_t(g.n()), 0);
  for (int v : led.sets.s0) in_s0[size_t(v)] = 1;
  for (int v : led.sets.low) is_low[size_t(v)] = 1;

  led.vertices.resize(size_t(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    VertexCharge& c = led.vertices[size_t(v)];
    c.v = v;
    c.h = h[size_t(v)];
    c.d = g.degree(v);
    c.initial = Rat(rho_vertex(led.params, c.h));
    // each incident pair of multiplicity s takes (s(2λ+1)-1)/2; summed: λd + (d-~d)/2
    c.after_pairs = c.initial - Rat(lam) * c.d - rat(c.d - g.skeleton_degree(v), 2);
    c.final_charge = c.after_pairs;
  }
  for (const EdgeSlot& e : g.pairs()) {
    led.pair_initial.push_back(Rat(rho_pair(led.params, e.mult)));
    if (!in_s0[size_t(e.u)] || !in_s0[size_t(e.v)]) continue;
    if (is_low[size_t(e.u)] == is_low[size_t(e.v)]) continue;
    int lo = is_low[size_t(e.u)] ? e.u : e.v;
    int hi = lo == e.u ? e.v : e.u;
    led.vertices[size_t(lo)].final_charge -= alpha * e.mult;
    led.vertices[size_t(hi)].final_charge += alpha * e.mult;
  }
  for (VertexCharge& c : led.vertices) {
    if (!in_s0[size_t(c.v)]) c.tag = "outside";
    else if (c.h > c.d) c.tag = "H";
    else if (c.h == c.d) c.tag = c.h == k - 1 ? "L2" : "L1";
    else if (c.d <= k - 1) c.tag = "N1";
    else c.tag = c.d == k ? "N2" : "N3";
    led.total += c.final_charge;
  }
  led.rho_total = Rat(rho_graph(g, h, led.params));
  return led;
}

CaseReport check_cases(const Multigraph& g, const ChargeLedger& led) {
  const int k = led.params.k;
  const long long lam = led.params.lambda;
  const Rat alpha = led.params.alpha;
  std::vector<char> in_s0(size_t(g.n()), 0), in_b0(size_t(g.n()), 0);
  for (int v : led.sets.s0) in_s0[size_t(v)] = 1;
  for (int v : led.sets.b0) in_b0[size_t(v)] = 1;

  CaseReport rep;
  for (const VertexCharge& c : led.vertices) {
    CaseRow row;
    row.v = c.v;
    row.tag = c.tag;
    row.final_charge = c.final_charge;
    if (c.tag == "outside") {
      row.note = "not in S0*";
    } else if (c.tag == "H") {
      row.note = "h(v) > d(v); no rule-derived ceiling";
    } else if (c.tag == "N1") {
      row.has_bound = true;
      row.bound = Rat(lam) * (c.h - c.d) - 1 + alpha * c.d;
      row.holds = c.final_charge <= row.bound && row.bound < Rat(-1);
    } else if (c.tag == "N2") {
      row.has_bound = true;
      row.bound = Rat(-lam + 1) + alpha * k;
      row.holds = c.final_charge <= row.bound && row.bound <= Rat(0);
    } else if (c.tag == "N3") {
      row.has_bound = true;
      row.bound = Rat(-2 * lam + 1) + alpha * (k + 1);
      row.holds = c.final_charge <= row.bound && row.bound < Rat(-1);
    } else {
      int dbs = degree_into(g, c.v, in_s0);
      int db0 = degree_into(g, c.v, in_b0);
      row.has_bound = true;
      Rat pair_term = rat(c.d - g.skeleton_degree(c.v), 2);
      if (c.tag == "L1") {
        row.bound = Rat(-1) - pair_term - alpha * (dbs - db0);
        row.holds = c.final_charge <= row.bound;
      } else {  // L2: exact
        row.bound = Rat(1) - pair_term - alpha * dbs + alpha * db0;
        row.holds = c.final_charge == row.bound;
      }
    }
    if (row.has_bound && !row.holds) rep.all_hold = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ComponentSumReport component_sum_vs_phi(const Multigraph& g, const ChargeLedger& led) {
  ComponentSumReport rep;
  if (led.sets.b0.empty()) {
    rep.vacuous = true;
    return rep;
  }
  Multigraph sub = induced_subgraph(g, led.sets.b0);
  for (const std::vector<int>& comp : sub.components()) {
    ComponentPhi cp;
    for (int i : comp) cp.vertices.push_back(led.sets.b0[size_t(i)]);
    std::vector<int> hb;
    for (int v : cp.vertices) {
      cp.ch_sum += led.vertices[size_t(v)].final_charge;
      hb.push_back(led.vertices[size_t(v)].h);
    }
    cp.phi = phi(induced_subgraph(g, cp.vertices), hb, led.params);
    cp.bound = -cp.phi.phi + led.params.alpha;
    cp.sum_le_bound = cp.ch_sum <= cp.bound;
    cp.strict_ok = cp.ch_sum < Rat(-1);
    if (!cp.sum_le_bound || (cp.phi.hypotheses_met && !cp.strict_ok)) rep.all_hold = false;
    rep.components.push_back(std::move(cp));
  }
  return rep;
}

std::string render_ledger(const Multigraph& g, const ChargeLedger& led, const CaseReport& cases) {
  std::ostringstream os;
  os << "v     h   d   tag      initial  after-pairs        final        bound ok\n";
  for (int v = 0; v < g.n(); ++v) {
    const VertexCharge& c = led.vertices[size_t(v)];
    const CaseRow& row = cases.rows[size_t(v)];
    os << std::left << std::setw(5) << v << ' ' << std::setw(3) << c.h << ' ' << std::setw(3)
       << c.d << ' ' << std::setw(8) << c.tag << std::right << std::setw(12)
       << to_fraction(c.initial) << ' ' << std::setw(12) << to_fraction(c.after_pairs) << ' '
       << std::setw(12) << to_fraction(c.final_charge) << ' ' << std::setw(12)
       << (row.has_bound ? to_fraction(row.bound) : std::string("-")) << ' '
       << (row.has_bound ? (row.holds ? "yes" : "NO") : "-") << '\n';
  }
  os << "total " << to_fraction(led.total) << "  rho_h(G) " << to_fraction(led.rho_total) << '\n';
  return os.str();
}

}  // namespace dpcolor
