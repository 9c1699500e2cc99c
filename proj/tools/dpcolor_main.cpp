// dpcolor: exact DP-coloring toolkit for loopless multigraphs.
//
// Exit codes: 0 property holds / value computed, 1 property fails (with a
// certificate where one exists), 2 usage error or malformed input, 3 budget
// exceeded. All output is deterministic for fixed inputs and flags.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpcolor/bounds.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/discharging.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/potential.hpp"
#include "dpcolor/rational.hpp"
#include "dpcolor/solver.hpp"

using namespace dpcolor;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Common {
  std::string format = "human";
  uint64_t max_covers = 10'000'000;
  uint64_t max_nodes = 100'000'000;
  int jobs = 1;
  bool no_degeneracy = false;

  bool json() const { return format == "json"; }
  SolveOptions solve_options() const {
    SolveOptions o;
    o.limits.max_covers = max_covers;
    o.limits.max_nodes = max_nodes;
    o.limits.jobs = jobs;
    o.degeneracy_shortcut = !no_degeneracy;
    return o;
  }
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
}

void add_budgets(CLI::App* sub, Common& c) {
  sub->add_option("--max-covers", c.max_covers, "cover enumeration budget")
      ->capture_default_str();
  sub->add_option("--max-nodes", c.max_nodes, "transversal search node budget")
      ->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads (verdicts are jobs-invariant)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--no-degeneracy", c.no_degeneracy, "disable the peeling shortcut");
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string vertex_set(const std::vector<int>& xs) { return "{" + join(xs, ", ") + "}"; }

// --h accepts an integer (uniform), the word "degrees", or a path to a file
// holding one integer per vertex (whitespace/comma separated, or a JSON array).
// With no --h, a JSON graph file may carry the list sizes itself.
std::vector<int> resolve_h(const std::string& spec, const GraphInput& in) {
  const size_t n = size_t(in.g.n());
  if (spec.empty()) {
    if (in.h) return *in.h;
    throw std::invalid_argument("no list sizes: pass --h or embed \"h\" in the graph JSON");
  }
  if (spec == "degrees") return in.g.degrees();
  {
    size_t pos = 0;
    try {
      int v = std::stoi(spec, &pos);
      if (pos == spec.size()) return std::vector<int>(n, v);
    } catch (const std::exception&) {
    }
  }
  std::string text = read_text_file(spec);
  std::vector<int> h;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    ojson j = ojson::parse(text);
    for (const auto& x : j) h.push_back(x.get<int>());
  } else {
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream is(text);
    for (int v; is >> v;) h.push_back(v);
  }
  if (h.size() != n)
    throw std::invalid_argument("--h file holds " + std::to_string(h.size()) +
                                " values for a graph on " + std::to_string(n) + " vertices");
  return h;
}

int infer_k(int k_flag, const std::vector<int>& h) {
  if (k_flag > 0) return k_flag;
  int cap = 0;
  for (int v : h) cap = std::max(cap, v);
  return cap + 1;
}

const char* status_name(HColorability::Status s) {
  switch (s) {
    case HColorability::colorable: return "colorable";
    case HColorability::not_colorable: return "not_colorable";
    default: return "undecided";
  }
}

std::string classification_name(AuditReport::Classification c, bool human) {
  switch (c) {
    case AuditReport::exceptional_complete_kk: return human ? "exceptional: K_k" : "exceptional_complete_kk";
    case AuditReport::exceptional_k2_4: return human ? "exceptional: K_2^4" : "exceptional_k2_4";
    case AuditReport::exceptional_double_cycle:
      return human ? "exceptional: double cycle" : "exceptional_double_cycle";
    case AuditReport::meets_edge_bound: return human ? "meets the edge bound" : "meets_edge_bound";
    default: return human ? "below the edge bound" : "below_edge_bound";
  }
}

void print_json(const ojson& j) { std::cout << j.dump(2) << '\n'; }

ojson cover_json(const Cover& c) { return ojson::parse(cover_to_json(c)); }

void emit_certificate(const Cover& c, const std::string& path, bool json_mode, ojson& j) {
  if (!path.empty()) {
    write_text_file(path, cover_to_json(c));
    if (json_mode)
      j["certificate_path"] = path;
    else
      std::cout << "bad cover written to " << path << '\n';
  } else if (json_mode) {
    j["bad_cover"] = cover_json(c);
  } else {
    std::cout << "bad cover:\n" << cover_to_json(c);
  }
}

// ---- subcommands ----

int run_solve(const std::string& cover_path, const Common& c) {
  Cover cov = cover_from_json(read_text_file(cover_path));
  TransversalResult r = find_transversal(cov, c.max_nodes);
  if (c.json()) {
    ojson j;
    j["command"] = "solve";
    j["status"] = r.status == TransversalResult::found  ? "found"
                  : r.status == TransversalResult::none ? "none"
                                                        : "budget";
    if (r.status == TransversalResult::found) j["transversal"] = r.transversal;
    j["nodes"] = r.nodes;
    print_json(j);
  } else {
    if (r.status == TransversalResult::found) {
      std::cout << "status: transversal found\ntransversal: " << join(r.transversal) << '\n';
    } else if (r.status == TransversalResult::none) {
      std::cout << "status: no transversal\n";
    } else {
      std::cout << "status: node budget exceeded\n";
    }
    std::cout << "nodes: " << r.nodes << '\n';
  }
  return r.status == TransversalResult::found  ? kOk
         : r.status == TransversalResult::none ? kFails
                                               : kBudget;
}

int run_dpcolor(const std::string& graph_path, const std::string& hspec,
                const std::string& cert_path, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  std::vector<int> h = resolve_h(hspec, in);
  HColorability r = is_dp_h_colorable(in.g, h, c.solve_options());
  ojson j;
  if (c.json()) {
    j["command"] = "dpcolor";
    j["n"] = in.g.n();
    j["h"] = h;
    j["status"] = status_name(r.status);
    j["method"] = r.method == HColorability::degeneracy ? "degeneracy" : "enumeration";
    j["covers_checked"] = r.covers_checked;
    j["search_nodes"] = r.search_nodes;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.bad_cover) j["bad_cover_index"] = r.bad_cover_index;
  } else {
    std::cout << "graph: " << in.g.n() << " vertices, " << in.g.edge_count() << " edges\n"
              << "h: " << join(h) << '\n'
              << "verdict: "
              << (r.status == HColorability::colorable        ? "DP h-colorable"
                  : r.status == HColorability::not_colorable ? "not DP h-colorable"
                                                              : "undecided")
              << '\n'
              << "method: " << (r.method == HColorability::degeneracy ? "degeneracy" : "enumeration")
              << '\n'
              << "covers checked: " << r.covers_checked << '\n'
              << "search nodes: " << r.search_nodes << '\n';
    if (!r.note.empty()) std::cout << "note: " << r.note << '\n';
    if (r.bad_cover) std::cout << "bad cover index: " << r.bad_cover_index << '\n';
  }
  if (r.bad_cover) emit_certificate(*r.bad_cover, cert_path, c.json(), j);
  if (c.json()) print_json(j);
  return r.status == HColorability::colorable        ? kOk
         : r.status == HColorability::not_colorable ? kFails
                                                     : kBudget;
}

int run_chidp(const std::string& graph_path, int max_k_flag, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  int max_k = max_k_flag;
  if (max_k <= 0) {
    int maxdeg = 0;
    for (int v = 0; v < in.g.n(); ++v) maxdeg = std::max(maxdeg, in.g.degree(v));
    max_k = maxdeg + 1;  // chi_DP never exceeds max degree + 1
  }
  ChiDpResult r = chi_dp(in.g, max_k, c.solve_options());
  if (c.json()) {
    ojson j;
    j["command"] = "chidp";
    j["status"] = r.status == ChiDpResult::determined  ? "determined"
                  : r.status == ChiDpResult::undecided ? "undecided"
                                                       : "exceeded_max_k";
    if (r.status == ChiDpResult::determined) j["chi_dp"] = r.chi;
    if (r.status != ChiDpResult::determined) j["stopped_at"] = r.stopped_at;
    ojson per = ojson::array();
    for (HColorability::Status s : r.per_k) per.push_back(status_name(s));
    j["per_k"] = per;
    print_json(j);
  } else {
    for (size_t i = 0; i < r.per_k.size(); ++i)
      std::cout << "probe k=" << i + 1 << ": " << status_name(r.per_k[i]) << '\n';
    if (r.status == ChiDpResult::determined)
      std::cout << "chi_dp: " << r.chi << '\n';
    else if (r.status == ChiDpResult::undecided)
      std::cout << "undecided at k=" << r.stopped_at << " (budget)\n";
    else
      std::cout << "not determined up to k=" << r.stopped_at << '\n';
  }
  return r.status == ChiDpResult::determined ? kOk : kBudget;
}

int run_critical(const std::string& graph_path, int k, const std::string& cert_path,
                 const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  MinimalityReport r = is_dp_critical(in.g, k, c.solve_options());
  ojson j;
  if (c.json()) {
    j["command"] = "critical";
    j["k"] = k;
  }
  int rc = kOk;
  if (r.status == MinimalityReport::h_minimal) {
    AuditReport a = audit_graph(in.g, k);
    if (c.json()) {
      j["status"] = "critical";
      j["classification"] = classification_name(a.classification, false);
    } else {
      std::cout << "DP " << k << "-critical (" << classification_name(a.classification, true)
                << ")\n";
    }
  } else if (r.status == MinimalityReport::colorable) {
    rc = kFails;
    if (c.json())
      j["status"] = "not_critical_colorable";
    else
      std::cout << "not DP " << k << "-critical: the graph is DP " << k - 1 << "-colorable\n";
  } else if (r.status == MinimalityReport::has_noncolorable_subgraph) {
    rc = kFails;
    const EdgeSlot& e = in.g.pairs()[size_t(r.offending_pair)];
    if (c.json()) {
      j["status"] = "not_critical_subgraph";
      j["offending_pair"] = ojson::array({e.u, e.v});
    } else {
      std::cout << "not DP " << k << "-critical: still non-colorable after deleting one copy of ("
                << e.u << "," << e.v << ")\n";
    }
    if (r.offending_bad_cover) emit_certificate(*r.offending_bad_cover, cert_path, c.json(), j);
  } else {
    rc = kBudget;
    if (c.json()) {
      j["status"] = "undecided";
      j["note"] = r.note;
    } else {
      std::cout << "undecided: " << r.note << '\n';
    }
  }
  if (c.json()) print_json(j);
  return rc;
}

int run_potential(const std::string& graph_path, const std::string& hspec, int k_flag,
                  std::vector<int> subset, bool have_subset, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  std::vector<int> h = resolve_h(hspec, in);
  PotentialParams pp = potential_params(infer_k(k_flag, h));
  long long value = 0;
  if (have_subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    value = rho_set(in.g, h, subset, pp);
  } else {
    value = rho_graph(in.g, h, pp);
  }
  if (c.json()) {
    ojson j;
    j["command"] = "potential";
    j["k"] = pp.k;
    j["lambda"] = pp.lambda;
    j["alpha"] = to_fraction(pp.alpha);
    if (have_subset) j["set"] = subset;
    j["rho"] = value;
    print_json(j);
  } else {
    std::cout << "k: " << pp.k << "\nlambda: " << pp.lambda
              << "\nalpha: " << to_fraction(pp.alpha) << '\n';
    if (have_subset)
      std::cout << "rho(" << vertex_set(subset) << "): " << value << '\n';
    else
      std::cout << "rho: " << value << '\n';
  }
  return kOk;
}

int run_phi(const std::string& graph_path, const std::string& hspec, int k_flag, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  std::vector<int> h = resolve_h(hspec, in);
  PotentialParams pp = potential_params(infer_k(k_flag, h));
  PhiReport r = phi(in.g, h, pp);
  if (c.json()) {
    ojson j;
    j["command"] = "phi";
    j["k"] = pp.k;
    j["phi"] = to_fraction(r.phi);
    j["threshold"] = to_fraction(r.threshold);
    j["exceeds"] = r.exceeds;
    j["h_in_range"] = r.h_in_range;
    j["h_at_least_degree"] = r.h_at_least_degree;
    j["gdp_tree"] = r.gdp_tree;
    j["no_forbidden_regular_blocks"] = r.no_forbidden_regular_blocks;
    j["hypotheses_met"] = r.hypotheses_met;
    print_json(j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "phi: " << to_fraction(r.phi) << '\n'
              << "threshold (1 + alpha): " << to_fraction(r.threshold) << '\n'
              << "exceeds: " << yn(r.exceeds) << '\n'
              << "hypotheses met: " << yn(r.hypotheses_met) << " (gdp-tree " << yn(r.gdp_tree)
              << "; h >= degree " << yn(r.h_at_least_degree) << "; h in [3, k-1] "
              << yn(r.h_in_range) << "; no forbidden regular blocks "
              << yn(r.no_forbidden_regular_blocks) << ")\n";
  }
  return r.exceeds ? kOk : kFails;
}

int run_classify(const std::string& graph_path, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  GdpClassification cls = classify_gdp(in.g);
  auto class_name = [](GdpClassification::ComponentClass k) {
    switch (k) {
      case GdpClassification::gallai_tree: return "GallaiTree";
      case GdpClassification::gdp_tree_only: return "GdpTreeOnly";
      default: return "NotGdpTree";
    }
  };
  auto kind_name = [](BlockTag::Kind k) {
    switch (k) {
      case BlockTag::clique_multiple: return "clique-multiple";
      case BlockTag::cycle_multiple: return "cycle-multiple";
      default: return "neither";
    }
  };
  if (c.json()) {
    ojson j;
    j["command"] = "classify";
    ojson comps = ojson::array();
    for (size_t i = 0; i < cls.component_vertices.size(); ++i) {
      ojson one;
      one["vertices"] = cls.component_vertices[i];
      one["class"] = class_name(cls.component_class[i]);
      comps.push_back(one);
    }
    j["components"] = comps;
    ojson blks = ojson::array();
    for (size_t i = 0; i < cls.block_decomposition.blocks.size(); ++i) {
      ojson one;
      one["vertices"] = cls.block_decomposition.blocks[i];
      one["kind"] = kind_name(cls.block_tags[i].kind);
      one["t"] = cls.block_tags[i].t;
      one["s"] = cls.block_tags[i].s;
      blks.push_back(one);
    }
    j["blocks"] = blks;
    print_json(j);
  } else {
    std::cout << "components: " << cls.component_vertices.size() << '\n';
    for (size_t i = 0; i < cls.component_vertices.size(); ++i)
      std::cout << "component " << i << ' ' << vertex_set(cls.component_vertices[i]) << ": "
                << class_name(cls.component_class[i]) << '\n';
    for (size_t i = 0; i < cls.block_decomposition.blocks.size(); ++i) {
      const BlockTag& t = cls.block_tags[i];
      std::cout << "block " << i << ' ' << vertex_set(cls.block_decomposition.blocks[i]) << ": "
                << kind_name(t.kind);
      if (t.kind != BlockTag::other) std::cout << " t=" << t.t << " s=" << t.s;
      std::cout << '\n';
    }
  }
  return kOk;
}

int run_bounds(bool table, std::vector<int> ks, const std::string& source, long long n,
               bool have_n, const Common& c) {
  if (table) {
    if (ks.empty()) ks = {5, 6, 7, 8, 9, 10, 15, 20};
    std::vector<Table1Row> rows = table1(ks);
    if (c.json()) {
      ojson j;
      j["command"] = "bounds";
      ojson out = ojson::array();
      for (const Table1Row& r : rows) {
        ojson one;
        one["k"] = r.k;
        one["ga"] = to_fraction(r.ga);
        one["ky"] = to_fraction(r.ky);
        one["ra"] = to_fraction(r.ra);
        one["dp"] = to_fraction(r.dp);
        out.push_back(one);
      }
      j["rows"] = out;
      print_json(j);
    } else {
      std::cout << render_table1(rows);
    }
    return kOk;
  }
  if (source.empty() || ks.size() != 1)
    throw std::invalid_argument("bounds: pass --table, or --source with exactly one --k value");
  static const std::map<std::string, BoundSource> names = {
      {"dirac", BoundSource::dirac},   {"gallai", BoundSource::gallai},
      {"krivelevich", BoundSource::krivelevich}, {"ks", BoundSource::ks},
      {"ky", BoundSource::ky},         {"rabern", BoundSource::rabern},
      {"dp", BoundSource::dp}};
  auto it = names.find(source);
  if (it == names.end()) throw std::invalid_argument("bounds: unknown source \"" + source + "\"");
  int k = ks[0];
  Rat coeff = avg_degree_coefficient(it->second, k);
  if (c.json()) {
    ojson j;
    j["command"] = "bounds";
    j["source"] = source;
    j["k"] = k;
    j["avg_degree_coefficient"] = to_fraction(coeff);
    if (have_n) {
      j["n"] = n;
      j["min_edges"] = to_fraction(min_edges(it->second, n, k));
    }
    print_json(j);
  } else {
    std::cout << "source: " << source << "\nk: " << k
              << "\navg-degree coefficient: " << to_fraction(coeff) << '\n';
    if (have_n)
      std::cout << "n: " << n << "\nmin edges: " << to_fraction(min_edges(it->second, n, k))
                << '\n';
  }
  return kOk;
}

int run_audit(const std::string& graph_path, int k, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  AuditReport a = audit_graph(in.g, k);
  if (c.json()) {
    ojson j;
    j["command"] = "audit";
    j["k"] = a.k;
    j["lambda"] = a.lambda;
    j["n"] = a.n;
    j["edges"] = a.edge_count;
    j["classification"] = classification_name(a.classification, false);
    j["threshold_defined"] = a.threshold_defined;
    if (a.threshold_defined) j["threshold"] = to_fraction(a.threshold);
    j["simple"] = a.simple;
    j["rho"] = a.rho;
    j["rho_at_most_minus2"] = a.rho_at_most_minus2;
    j["equivalence_checked"] = a.equivalence_checked;
    if (a.equivalence_checked) j["equivalence_holds"] = a.equivalence_holds;
    print_json(j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "k: " << a.k << "\nlambda: " << a.lambda << "\nn: " << a.n
              << "\nedges: " << a.edge_count
              << "\nclassification: " << classification_name(a.classification, true) << '\n';
    if (a.threshold_defined)
      std::cout << "edge threshold: " << to_fraction(a.threshold) << '\n';
    else
      std::cout << "edge threshold: undefined (needs n >= k+2)\n";
    std::cout << "simple: " << yn(a.simple) << "\nrho at h = k-1: " << a.rho
              << "\nrho <= -2: " << yn(a.rho_at_most_minus2) << '\n';
    if (a.equivalence_checked)
      std::cout << "equivalence rho <= -2 <=> edges >= threshold: "
                << (a.equivalence_holds ? "holds" : "FAILS") << '\n';
    else
      std::cout << "equivalence rho <= -2 <=> edges >= threshold: not applicable\n";
  }
  return a.equivalence_checked && !a.equivalence_holds ? kFails : kOk;
}

int run_discharge(const std::string& graph_path, const std::string& hspec, int k_flag,
                  const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  std::vector<int> h = resolve_h(hspec, in);
  int k = infer_k(k_flag, h);
  ChargeLedger led = discharge(in.g, h, k);
  CaseReport cases = check_cases(in.g, led);
  ComponentSumReport comp = component_sum_vs_phi(in.g, led);
  bool conserved = led.total == led.rho_total;
  bool ok = conserved && cases.all_hold && comp.all_hold;
  if (c.json()) {
    ojson j;
    j["command"] = "discharge";
    j["k"] = k;
    j["s0"] = led.sets.s0;
    j["s0_rule"] = led.sets.reason;
    if (led.sets.x0 >= 0) j["attachment"] = ojson::array({led.sets.x0, led.sets.y0});
    ojson verts = ojson::array();
    for (const VertexCharge& vc : led.vertices) {
      ojson one;
      one["v"] = vc.v;
      one["h"] = vc.h;
      one["d"] = vc.d;
      one["tag"] = vc.tag;
      one["initial"] = to_fraction(vc.initial);
      one["after_pairs"] = to_fraction(vc.after_pairs);
      one["final"] = to_fraction(vc.final_charge);
      const CaseRow& row = cases.rows[size_t(vc.v)];
      if (row.has_bound) {
        one["bound"] = to_fraction(row.bound);
        one["holds"] = row.holds;
      }
      verts.push_back(one);
    }
    j["vertices"] = verts;
    j["total"] = to_fraction(led.total);
    j["rho"] = to_fraction(led.rho_total);
    j["conserved"] = conserved;
    j["case_bounds_hold"] = cases.all_hold;
    ojson comps = ojson::array();
    for (const ComponentPhi& cp : comp.components) {
      ojson one;
      one["vertices"] = cp.vertices;
      one["sum"] = to_fraction(cp.ch_sum);
      one["bound"] = to_fraction(cp.bound);
      one["phi"] = to_fraction(cp.phi.phi);
      one["sum_le_bound"] = cp.sum_le_bound;
      one["hypotheses_met"] = cp.phi.hypotheses_met;
      one["strict_ok"] = cp.strict_ok;
      comps.push_back(one);
    }
    j["components"] = comps;
    j["component_sums_hold"] = comp.all_hold;
    print_json(j);
  } else {
    std::cout << "k: " << k << "  lambda: " << led.params.lambda
              << "  alpha: " << to_fraction(led.params.alpha) << '\n'
              << "S0*: " << vertex_set(led.sets.s0) << " — " << led.sets.reason << '\n';
    if (led.sets.x0 >= 0)
      std::cout << "attachment edge: x0=" << led.sets.x0 << " y0=" << led.sets.y0 << '\n';
    std::cout << render_ledger(in.g, led, cases);
    std::cout << "charge conserved: " << (conserved ? "yes" : "NO") << '\n'
              << "case bounds: " << (cases.all_hold ? "all hold" : "VIOLATED") << '\n';
    if (comp.vacuous) {
      std::cout << "component sums: vacuous (no low vertex in S0*)\n";
    } else {
      for (const ComponentPhi& cp : comp.components)
        std::cout << "component " << vertex_set(cp.vertices) << ": sum "
                  << to_fraction(cp.ch_sum) << " <= " << to_fraction(cp.bound) << " (phi "
                  << to_fraction(cp.phi.phi) << "; hypotheses "
                  << (cp.phi.hypotheses_met ? "met" : "not met") << ")"
                  << (cp.sum_le_bound ? "" : " VIOLATED") << '\n';
      std::cout << "component sums: " << (comp.all_hold ? "all hold" : "VIOLATED") << '\n';
    }
  }
  return ok ? kOk : kFails;
}

int run_lemma31(const std::string& family, int t, int q, const Common& c) {
  static const std::map<std::string, HardFamily> names = {{"even_cycle", HardFamily::even_cycle},
                                                          {"clique", HardFamily::clique},
                                                          {"odd_cycle", HardFamily::odd_cycle}};
  auto it = names.find(family);
  if (it == names.end())
    throw std::invalid_argument("lemma31: family must be even_cycle, clique, or odd_cycle");
  Lemma31Report r = verify_lemma31(it->second, t, q, c.solve_options());
  if (c.json()) {
    ojson j;
    j["command"] = "lemma31";
    j["family"] = family;
    j["t"] = t;
    j["q"] = q;
    j["status"] = r.status == Lemma31Report::verified  ? "verified"
                  : r.status == Lemma31Report::failed ? "failed"
                                                       : "undecided";
    j["covers_total"] = r.covers_total;
    j["bad_count"] = r.bad_count;
    j["bad_indices"] = r.bad_indices;
    if (!r.note.empty()) j["note"] = r.note;
    print_json(j);
  } else {
    std::cout << "family: " << family << " t=" << t << " q=" << q << '\n'
              << "covers: " << r.covers_total << '\n'
              << "bad covers: " << r.bad_count << '\n';
    if (r.status == Lemma31Report::verified)
      std::cout << "status: verified — the non-colorable covers are exactly the relabelings of "
                   "the canonical hard cover\n";
    else if (r.status == Lemma31Report::failed)
      std::cout << "status: FAILED — " << r.note << '\n';
    else
      std::cout << "status: undecided — " << r.note << '\n';
  }
  return r.status == Lemma31Report::verified  ? kOk
         : r.status == Lemma31Report::failed ? kFails
                                              : kBudget;
}

int run_listcover(const std::string& graph_path, const std::string& lists_path,
                  const std::string& out_path, const Common& c) {
  GraphInput in = read_graph_file(graph_path);
  ojson lj = ojson::parse(read_text_file(lists_path));
  std::vector<std::vector<std::string>> lists;
  for (const auto& row : lj) {
    std::vector<std::string> one;
    for (const auto& name : row) one.push_back(name.get<std::string>());
    lists.push_back(std::move(one));
  }
  Cover cov = cover_from_lists(in.g, lists);
  std::string text = cover_to_json(cov);
  if (!out_path.empty()) {
    write_text_file(out_path, text);
    if (c.json()) {
      ojson j;
      j["command"] = "listcover";
      j["cover_path"] = out_path;
      print_json(j);
    } else {
      std::cout << "cover written to " << out_path << '\n';
    }
  } else {
    std::cout << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact DP-coloring (correspondence coloring) toolkit"};
  app.require_subcommand(1);
  // --h is an option name here, so the help flag must not claim -h
  app.set_help_flag("--help", "print help");

  Common common;
  std::string graph_path, cover_path, hspec, cert_path, source, family, lists_path, out_path;
  std::vector<int> ks, subset;
  int k_flag = 0, max_k = 0, t = 2, q = 1;
  long long n_value = 0;
  bool table = false;

  auto subcommand = [&app](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  CLI::App* solve = subcommand("solve", "search one cover file for a transversal");
  solve->add_option("--cover", cover_path, "cover JSON file")->required();
  add_format(solve, common);
  solve->add_option("--max-nodes", common.max_nodes)->capture_default_str();

  CLI::App* dpc = subcommand("dpcolor", "decide DP h-colorability");
  dpc->add_option("--graph", graph_path, "graph file (graph6 or JSON)")->required();
  dpc->add_option("--h", hspec, "list sizes: integer, 'degrees', or a file");
  dpc->add_option("--certificate", cert_path, "write the bad cover here");
  add_format(dpc, common);
  add_budgets(dpc, common);

  CLI::App* chi = subcommand("chidp", "compute the DP chromatic number");
  chi->add_option("--graph", graph_path)->required();
  chi->add_option("--max-k", max_k, "probe ceiling (default: max degree + 1)");
  add_format(chi, common);
  add_budgets(chi, common);

  CLI::App* crit = subcommand("critical", "decide DP k-criticality");
  crit->add_option("--graph", graph_path)->required();
  crit->add_option("--k", k_flag)->required();
  crit->add_option("--certificate", cert_path, "write the offending bad cover here");
  add_format(crit, common);
  add_budgets(crit, common);

  CLI::App* pot = subcommand("potential", "evaluate the potential rho");
  pot->add_option("--graph", graph_path)->required();
  pot->add_option("--h", hspec);
  pot->add_option("--k", k_flag, "default: max h + 1");
  CLI::Option* set_opt = pot->add_option("--set", subset, "vertex subset")->delimiter(',');
  add_format(pot, common);

  CLI::App* phi_cmd = subcommand("phi", "evaluate the tree potential Phi");
  phi_cmd->add_option("--graph", graph_path)->required();
  phi_cmd->add_option("--h", hspec);
  phi_cmd->add_option("--k", k_flag, "default: max h + 1");
  add_format(phi_cmd, common);

  CLI::App* cls = subcommand("classify", "GDP / Gallai block classification");
  cls->add_option("--graph", graph_path)->required();
  add_format(cls, common);

  CLI::App* bnd = subcommand("bounds", "edge-count lower bounds");
  bnd->add_flag("--table", table, "render the comparison table");
  bnd->add_option("--k", ks)->delimiter(',');
  bnd->add_option("--source", source, "dirac gallai krivelevich ks ky rabern dp");
  CLI::Option* n_opt = bnd->add_option("--n", n_value, "vertex count for the full bound");
  add_format(bnd, common);

  CLI::App* aud = subcommand("audit", "where a graph stands against the edge bound");
  aud->add_option("--graph", graph_path)->required();
  aud->add_option("--k", k_flag)->required();
  add_format(aud, common);

  CLI::App* dis = subcommand("discharge", "run the discharging rules and checks");
  dis->add_option("--graph", graph_path)->required();
  dis->add_option("--h", hspec);
  dis->add_option("--k", k_flag, "default: max h + 1");
  add_format(dis, common);

  CLI::App* lem = subcommand("lemma31", "verify the hard-cover catalog for a family");
  lem->add_option("--family", family, "even_cycle | clique | odd_cycle")->required();
  lem->add_option("--t", t)->required();
  lem->add_option("--q", q)->capture_default_str();
  add_format(lem, common);
  add_budgets(lem, common);

  CLI::App* lst = subcommand("listcover", "build the cover of a list assignment");
  lst->add_option("--graph", graph_path)->required();
  lst->add_option("--lists", lists_path, "JSON array of per-vertex color-name arrays")->required();
  lst->add_option("--out", out_path, "write the cover here instead of stdout");
  add_format(lst, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return run_solve(cover_path, common);
    if (dpc->parsed()) return run_dpcolor(graph_path, hspec, cert_path, common);
    if (chi->parsed()) return run_chidp(graph_path, max_k, common);
    if (crit->parsed()) return run_critical(graph_path, k_flag, cert_path, common);
    if (pot->parsed())
      return run_potential(graph_path, hspec, k_flag, subset, set_opt->count() > 0, common);
    if (phi_cmd->parsed()) return run_phi(graph_path, hspec, k_flag, common);
    if (cls->parsed()) return run_classify(graph_path, common);
    if (bnd->parsed()) return run_bounds(table, ks, source, n_value, n_opt->count() > 0, common);
    if (aud->parsed()) return run_audit(graph_path, k_flag, common);
    if (dis->parsed()) return run_discharge(graph_path, hspec, k_flag, common);
    if (lem->parsed()) return run_lemma31(family, t, q, common);
    if (lst->parsed()) return run_listcover(graph_path, lists_path, out_path, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
