#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpcolor {

// One vertex pair with its edge multiplicity; always stored with u < v.
struct EdgeSlot {
  int u = 0, v = 0, mult = 1;
  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

// Loopless multigraph on vertices 0..n-1. Immutable after construction; the
// canonical representation is the sorted pair list, so equal graphs compare equal.
class Multigraph {
 public:
  Multigraph() = default;

  // Validates: n >= 0, endpoints in range, no loops, multiplicity >= 1.
  // Duplicate pairs are merged by summing multiplicities.
  static Multigraph build(int n, std::vector<EdgeSlot> edges);

  int n() const { return n_; }
  const std::vector<EdgeSlot>& pairs() const { return pairs_; }
  int pair_count() const { return int(pairs_.size()); }
  long long edge_count() const { return edge_count_; }          // with multiplicity
  int excess() const { return int(edge_count_ - pairs_.size()); }  // |E(G)| - |E(~G)|

  int pair_index(int u, int v) const;  // -1 if not adjacent
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return pair_index(u, v) >= 0; }

  int degree(int v) const { return degree_[v]; }                   // with multiplicity
  int skeleton_degree(int v) const { return int(nbrs_[v].size()); }
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return nbrs_[v]; }  // (w, mult)
  const std::vector<int>& incident_pairs(int v) const { return pair_ids_[v]; }
  std::vector<int> degrees() const { return degree_; }

  bool is_simple() const { return excess() == 0; }
  Multigraph skeleton() const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;  // sorted vertex lists

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  int n_ = 0;
  std::vector<EdgeSlot> pairs_;
  long long edge_count_ = 0;
  std::vector<int> degree_;
  std::vector<std::vector<std::pair<int, int>>> nbrs_;
  std::vector<std::vector<int>> pair_ids_;
};

// ---- derived subgraphs ----

// Induced sub-multigraph; vertex i of the result is vs[i]. vs must be sorted, unique, in range.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vs);

// Remove one copy of edge uv (pre: adjacent). Keeps vertex ids.
Multigraph delete_edge_copy(const Multigraph& g, int u, int v);

// Add m parallel copies between u and v.
Multigraph add_edges(const Multigraph& g, int u, int v, int m = 1);

struct RelabeledGraph {
  Multigraph g;
  std::vector<int> old_to_new;  // -1 for removed vertices
};
RelabeledGraph remove_vertices(const Multigraph& g, const std::vector<int>& drop);

// ---- block structure ----

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted vertex sets; isolated vertex => singleton
  std::vector<int> cut_vertices;         // sorted
  std::vector<std::vector<int>> blocks_at_vertex;  // block indices containing each vertex
  bool is_cut(int v) const;
};
BlockDecomposition blocks(const Multigraph& g);

struct EdgeBlockDecomposition {
  // Maximal 2-edge-connected pieces (>= 2 vertices) plus one 2-set per cut edge;
  // a one-vertex component is its own edge-block.
  std::vector<std::vector<int>> edge_blocks;
  std::vector<bool> is_cut_edge_block;  // aligned: the K_2 blocks formed by cut edges
  std::vector<EdgeSlot> cut_edges;
  // pendent <=> exactly one edge of g (with multiplicity) leaves the block
  std::vector<bool> pendent;
};
EdgeBlockDecomposition edge_blocks(const Multigraph& g);

// ---- GDP / Gallai classification ----

struct BlockTag {
  enum Kind { clique_multiple, cycle_multiple, other } kind = other;
  int t = 0;  // vertex count of the block
  int s = 0;  // uniform multiplicity (0 when kind == other)
};

struct GdpClassification {
  enum ComponentClass { gallai_tree, gdp_tree_only, not_gdp_tree };
  BlockDecomposition block_decomposition;
  std::vector<BlockTag> block_tags;                 // aligned with blocks
  std::vector<std::vector<int>> component_vertices;
  std::vector<ComponentClass> component_class;
  bool all_gdp() const;
  bool all_gallai() const;
};
GdpClassification classify_gdp(const Multigraph& g);

// ---- standard families ----

Multigraph clique_multiple(int t, int s);  // K_t^s, t >= 1 (s ignored for t = 1)
Multigraph cycle_multiple(int n, int s);   // C_n^s, n >= 3
// q-blowup of a simple graph: vertex v becomes {v*q, .., v*q+q-1}, each edge a K_{q,q}.
Multigraph blowup(const Multigraph& simple_g, int q);

// ---- block surgery ----

// (g - V(B)) plus one extra edge between u and u2. B must be a block of g and
// u, u2 distinct vertices outside B, each adjacent to B. Survivors are relabeled
// in increasing order of their old ids.
RelabeledGraph block_surgery(const Multigraph& g, const std::vector<int>& block_vertices,
                             int u, int u2);

}  // namespace dpcolor
