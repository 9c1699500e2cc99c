#include "dpcolor/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dpcolor {

Multigraph Multigraph::build(int n, std::vector<EdgeSlot> edges) {
  if (n < 0) throw std::invalid_argument("multigraph: negative vertex count");
  std::map<std::pair<int, int>, long long> merged;
  for (auto e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("multigraph: endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("multigraph: loops are not allowed");
    if (e.mult < 1) throw std::invalid_argument("multigraph: multiplicity must be >= 1");
    merged[{e.u, e.v}] += e.mult;
  }
  Multigraph g;
  g.n_ = n;
  g.degree_.assign(n, 0);
  g.nbrs_.resize(n);
  g.pair_ids_.resize(n);
  for (auto& [uv, m] : merged) {
    if (m > 1'000'000'000) throw std::invalid_argument("multigraph: multiplicity overflow");
    int id = int(g.pairs_.size());
    g.pairs_.push_back({uv.first, uv.second, int(m)});
    g.edge_count_ += m;
    g.degree_[uv.first] += int(m);
    g.degree_[uv.second] += int(m);
    g.nbrs_[uv.first].push_back({uv.second, int(m)});
    g.nbrs_[uv.second].push_back({uv.first, int(m)});
    g.pair_ids_[uv.first].push_back(id);
    g.pair_ids_[uv.second].push_back(id);
  }
  return g;
}

int Multigraph::pair_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v) return -1;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{u, v},
                             [](const EdgeSlot& e, const std::pair<int, int>& p) {
                               return std::pair{e.u, e.v} < p;
                             });
  if (it != pairs_.end() && it->u == u && it->v == v) return int(it - pairs_.begin());
  return -1;
}

int Multigraph::multiplicity(int u, int v) const {
  int i = pair_index(u, v);
  return i < 0 ? 0 : pairs_[i].mult;
}

Multigraph Multigraph::skeleton() const {
  std::vector<EdgeSlot> es = pairs_;
  for (auto& e : es) e.mult = 1;
  return build(n_, std::move(es));
}

std::vector<std::vector<int>> Multigraph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (auto [w, m] : nbrs_[v])
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Multigraph::connected() const {
  if (n_ <= 1) return true;
  return components().size() == 1;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vs) {
  std::vector<int> map(g.n(), -1);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (i > 0 && vs[i] <= vs[i - 1]) throw std::invalid_argument("induced_subgraph: vertices must be sorted and unique");
    map[vs[i]] = int(i);
  }
  std::vector<EdgeSlot> es;
  for (const auto& e : g.pairs())
    if (map[e.u] >= 0 && map[e.v] >= 0) es.push_back({map[e.u], map[e.v], e.mult});
  return Multigraph::build(int(vs.size()), std::move(es));
}

Multigraph delete_edge_copy(const Multigraph& g, int u, int v) {
  int idx = g.pair_index(u, v);
  if (idx < 0) throw std::invalid_argument("delete_edge_copy: vertices not adjacent");
  std::vector<EdgeSlot> es = g.pairs();
  if (--es[idx].mult == 0) es.erase(es.begin() + idx);
  return Multigraph::build(g.n(), std::move(es));
}

Multigraph add_edges(const Multigraph& g, int u, int v, int m) {
  std::vector<EdgeSlot> es = g.pairs();
  es.push_back({u, v, m});
  return Multigraph::build(g.n(), std::move(es));
}

RelabeledGraph remove_vertices(const Multigraph& g, const std::vector<int>& drop) {
  std::vector<bool> gone(g.n(), false);
  for (int v : drop) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("remove_vertices: vertex out of range");
    gone[v] = true;
  }
  std::vector<int> old_to_new(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v]) old_to_new[v] = next++;
  std::vector<EdgeSlot> es;
  for (const auto& e : g.pairs())
    if (!gone[e.u] && !gone[e.v]) es.push_back({old_to_new[e.u], old_to_new[e.v], e.mult});
  return {Multigraph::build(next, std::move(es)), std::move(old_to_new)};
}

// ---- blocks (biconnected components of the skeleton, iterative lowpoint DFS) ----

bool BlockDecomposition::is_cut(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition blocks(const Multigraph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  std::vector<int> pair_stack;
  BlockDecomposition out;
  int timer = 0;

  struct Frame {
    int v, parent_pair, child_count;
    size_t next;
  };

  auto emit_block = [&](int until_pair) {
    std::vector<int> vs;
    while (true) {
      int p = pair_stack.back();
      pair_stack.pop_back();
      vs.push_back(g.pairs()[p].u);
      vs.push_back(g.pairs()[p].v);
      if (p == until_pair) break;
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.blocks.push_back(std::move(vs));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.incident_pairs(root).empty()) {
      disc[root] = timer++;
      out.blocks.push_back({root});  // isolated vertex
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_pairs(f.v);
      if (f.next < inc.size()) {
        int p = inc[f.next++];
        const auto& e = g.pairs()[p];
        int w = e.u == f.v ? e.v : e.u;
        if (disc[w] < 0) {
          pair_stack.push_back(p);
          ++f.child_count;
          disc[w] = low[w] = timer++;
          stack.push_back({w, p, 0, 0});
        } else if (p != f.parent_pair || e.mult > 1) {
          // back edge (a parallel copy of the tree edge counts)
          if (disc[w] < disc[f.v] && p != f.parent_pair) pair_stack.push_back(p);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (stack.empty()) {
          if (done.child_count >= 2) cut[done.v] = true;
          continue;
        }
        Frame& par = stack.back();
        low[par.v] = std::min(low[par.v], low[done.v]);
        if (low[done.v] >= disc[par.v]) {
          // par.v separates the subtree rooted at done.v; the root's cut-ness
          // is decided by its child count when its own frame pops
          if (par.parent_pair != -1) cut[par.v] = true;
          emit_block(done.parent_pair);
        }
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  out.blocks_at_vertex.resize(n);
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b]) out.blocks_at_vertex[v].push_back(int(b));
  return out;
}

// ---- edge-blocks (2-edge-connected pieces + cut edges) ----

namespace {

// Bridges of a multigraph: only multiplicity-1 pairs can be bridges.
std::vector<int> bridge_pairs(const Multigraph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> result;
  struct Frame {
    int v, parent_pair;
    size_t next;
  };
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_pairs(f.v);
      if (f.next < inc.size()) {
        int p = inc[f.next++];
        const auto& e = g.pairs()[p];
        int w = e.u == f.v ? e.v : e.u;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, p, 0});
        } else if (p != f.parent_pair || e.mult > 1) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (stack.empty()) continue;
        Frame& par = stack.back();
        low[par.v] = std::min(low[par.v], low[done.v]);
        if (low[done.v] > disc[par.v]) result.push_back(done.parent_pair);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

EdgeBlockDecomposition edge_blocks(const Multigraph& g) {
  EdgeBlockDecomposition out;
  std::vector<int> bridges = bridge_pairs(g);
  for (int p : bridges) out.cut_edges.push_back(g.pairs()[p]);

  Dsu dsu(g.n());
  for (int p = 0; p < g.pair_count(); ++p)
    if (!std::binary_search(bridges.begin(), bridges.end(), p))
      dsu.join(g.pairs()[p].u, g.pairs()[p].v);

  std::vector<std::vector<int>> classes(g.n());
  for (int v = 0; v < g.n(); ++v) classes[dsu.find(v)].push_back(v);

  for (auto& cls : classes) {
    if (cls.size() >= 2) {
      out.edge_blocks.push_back(cls);
      out.is_cut_edge_block.push_back(false);
    } else if (cls.size() == 1 && g.degree(cls[0]) == 0) {
      out.edge_blocks.push_back(cls);  // isolated vertex
      out.is_cut_edge_block.push_back(false);
    }
  }
  for (int p : bridges) {
    out.edge_blocks.push_back({g.pairs()[p].u, g.pairs()[p].v});
    out.is_cut_edge_block.push_back(true);
  }

  for (const auto& bl : out.edge_blocks) {
    long long leaving = 0;
    std::vector<bool> in(g.n(), false);
    for (int v : bl) in[v] = true;
    for (const auto& e : g.pairs())
      if (in[e.u] != in[e.v]) leaving += e.mult;
    out.pendent.push_back(leaving == 1);
  }
  return out;
}

// ---- classification ----

namespace {

BlockTag tag_block(const Multigraph& b) {
  const int t = b.n();
  if (t == 1) return {BlockTag::clique_multiple, 1, 1};
  int s = b.pairs()[0].mult;
  for (const auto& e : b.pairs())
    if (e.mult != s) return {BlockTag::other, t, 0};
  if (t == 2) return {BlockTag::clique_multiple, 2, s};
  if (b.pair_count() == t * (t - 1) / 2) return {BlockTag::clique_multiple, t, s};
  bool cycle = b.pair_count() == t;
  for (int v = 0; cycle && v < t; ++v) cycle = b.skeleton_degree(v) == 2;
  if (cycle) return {BlockTag::cycle_multiple, t, s};
  return {BlockTag::other, t, 0};
}

bool gallai_block(const BlockTag& tag) {
  if (tag.kind == BlockTag::clique_multiple) return tag.s == 1;
  if (tag.kind == BlockTag::cycle_multiple) return tag.s == 1 && tag.t % 2 == 1;
  return false;
}

}  // namespace

bool GdpClassification::all_gdp() const {
  for (auto c : component_class)
    if (c == not_gdp_tree) return false;
  return true;
}

bool GdpClassification::all_gallai() const {
  for (auto c : component_class)
    if (c != gallai_tree) return false;
  return true;
}

GdpClassification classify_gdp(const Multigraph& g) {
  GdpClassification out;
  out.block_decomposition = blocks(g);
  for (const auto& bl : out.block_decomposition.blocks)
    out.block_tags.push_back(tag_block(induced_subgraph(g, bl)));

  out.component_vertices = g.components();
  std::vector<int> comp_of(g.n(), -1);
  for (size_t c = 0; c < out.component_vertices.size(); ++c)
    for (int v : out.component_vertices[c]) comp_of[v] = int(c);

  out.component_class.assign(out.component_vertices.size(), GdpClassification::gallai_tree);
  for (size_t b = 0; b < out.block_tags.size(); ++b) {
    int c = comp_of[out.block_decomposition.blocks[b][0]];
    auto& cls = out.component_class[c];
    const BlockTag& tag = out.block_tags[b];
    if (tag.kind == BlockTag::other)
      cls = GdpClassification::not_gdp_tree;
    else if (!gallai_block(tag) && cls == GdpClassification::gallai_tree)
      cls = GdpClassification::gdp_tree_only;
  }
  return out;
}

// ---- families ----

Multigraph clique_multiple(int t, int s) {
  if (t < 1) throw std::invalid_argument("clique_multiple: t must be >= 1");
  if (t >= 2 && s < 1) throw std::invalid_argument("clique_multiple: s must be >= 1");
  std::vector<EdgeSlot> es;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) es.push_back({u, v, s});
  return Multigraph::build(t, std::move(es));
}

Multigraph cycle_multiple(int n, int s) {
  if (n < 3) throw std::invalid_argument("cycle_multiple: n must be >= 3");
  if (s < 1) throw std::invalid_argument("cycle_multiple: s must be >= 1");
  std::vector<EdgeSlot> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n, s});
  return Multigraph::build(n, std::move(es));
}

Multigraph blowup(const Multigraph& simple_g, int q) {
  if (!simple_g.is_simple()) throw std::invalid_argument("blowup: base graph must be simple");
  if (q < 1) throw std::invalid_argument("blowup: q must be >= 1");
  std::vector<EdgeSlot> es;
  for (const auto& e : simple_g.pairs())
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) es.push_back({e.u * q + a, e.v * q + b, 1});
  return Multigraph::build(simple_g.n() * q, std::move(es));
}

// ---- surgery ----

RelabeledGraph block_surgery(const Multigraph& g, const std::vector<int>& block_vertices,
                             int u, int u2) {
  std::vector<int> bl = block_vertices;
  std::sort(bl.begin(), bl.end());
  auto dec = blocks(g);
  if (std::find(dec.blocks.begin(), dec.blocks.end(), bl) == dec.blocks.end())
    throw std::invalid_argument("block_surgery: vertex set is not a block");
  if (u == u2) throw std::invalid_argument("block_surgery: u and u2 must differ");
  for (int x : {u, u2}) {
    if (x < 0 || x >= g.n()) throw std::invalid_argument("block_surgery: vertex out of range");
    if (std::binary_search(bl.begin(), bl.end(), x))
      throw std::invalid_argument("block_surgery: u and u2 must lie outside the block");
    bool touches = false;
    for (int b : bl) touches = touches || g.adjacent(x, b);
    if (!touches) throw std::invalid_argument("block_surgery: u and u2 must be neighbors of the block");
  }
  RelabeledGraph r = remove_vertices(g, bl);
  r.g = add_edges(r.g, r.old_to_new[u], r.old_to_new[u2], 1);
  return r;
}

}  // namespace dpcolor
