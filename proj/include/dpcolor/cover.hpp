#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpcolor/multigraph.hpp"

namespace dpcolor {

// Colors are namespaced per vertex: color i at v means index i into v's list.
// A matching is a set of (i, j) pairs, sorted by i, with distinct i's and j's.
using Matching = std::vector<std::pair<int, int>>;

// A DP-cover of g: one list size per vertex, and for each pair slot of g exactly
// mult matchings between the two lists. The conflict graph between L(u) and L(v)
// is the union of the slot's matchings.
struct Cover {
  Multigraph g;
  std::vector<int> list_sizes;
  std::vector<std::vector<Matching>> matchings;  // aligned with g.pairs()
  friend bool operator==(const Cover&, const Cover&) = default;
};

// Validates shapes: one matching vector per pair slot with exactly mult entries,
// indices in range, matching property. Matchings are canonicalized (sorted by i).
Cover build_cover(Multigraph g, std::vector<int> list_sizes,
                  std::vector<std::vector<Matching>> matchings);

// Cover of the q-multiple of c.g (every multiplicity scaled by q): each color
// becomes an independent q-set, each conflict edge a K_{q,q} split into q matchings.
Cover blowup_cover(const Cover& c, int q);

// List-coloring reduction for simple graphs: equal color names get matched.
// Transversals correspond exactly to proper list colorings.
Cover cover_from_lists(const Multigraph& g, const std::vector<std::vector<std::string>>& lists);

// The canonical non-colorable covers:
//   even_cycle: C_{2t}^q with lists 2q (cycle blowup of the twisted 2-cover), t >= 2
//   clique:     K_t^q with lists (t-1)q (blowup of t-1 disjoint copies), t >= 1
//   odd_cycle:  C_{2t+1}^q with lists 2q (blowup of 2 disjoint copies), t >= 1
enum class HardFamily { even_cycle, clique, odd_cycle };
Cover hard_cover(HardFamily fam, int t, int q);

// Same base graph and list sizes, and some per-vertex color relabeling maps the
// conflict graph of a onto that of b.
bool covers_isomorphic(const Cover& a, const Cover& b);

// ---- exhaustive cover enumeration ----

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  bool maximal_only = true;    // each matching saturates the smaller list
  bool tree_normalized = true; // pin one matching per spanning-forest edge (needs maximal_only)
};

// Per-cover conflict masks used by the transversal search. Lists are capped at
// 64 colors so a row fits one word.
struct SlotMasks {
  std::vector<uint64_t> fwd;  // for color i of u: conflicting colors of v
  std::vector<uint64_t> bwd;
};
struct ConflictTable {
  int n = 0;
  std::vector<int> sizes;
  std::vector<SlotMasks> slots;             // aligned with g.pairs()
  std::vector<std::pair<int, int>> ends;    // (u, v) per slot, u < v
};

// The space of all |L(v)| = h(v) covers of g up to the selected normalizations,
// totally ordered: index 0 assigns the first catalog matching (the identity
// injection in maximal mode) everywhere.
class CoverSpace {
 public:
  CoverSpace(Multigraph g, std::vector<int> h, EnumOptions opts);
  CoverSpace(const CoverSpace&) = delete;
  CoverSpace& operator=(const CoverSpace&) = delete;
  CoverSpace(CoverSpace&&) = default;

  static constexpr uint64_t kCountCap = ~uint64_t(0);
  uint64_t count() const { return count_; }  // saturates at kCountCap

  Cover materialize(uint64_t index) const;
  ConflictTable make_table() const;
  // scratch avoids re-allocation in the enumeration loop; pass one per thread
  void fill_conflicts(uint64_t index, ConflictTable& ct, std::vector<int>& scratch) const;

  const Multigraph& graph() const { return g_; }
  const std::vector<int>& h() const { return h_; }

 private:
  struct CatalogEntry {
    Matching m;
    std::vector<uint64_t> fwd, bwd;
  };
  struct Catalog {
    std::vector<CatalogEntry> entries;
  };
  struct Slot {
    int pair = 0;
    const Catalog* catalog = nullptr;
    int copies = 0;        // matchings carried by this slot (= multiplicity)
    int free_copies = 0;
    std::vector<int> frozen;   // candidate catalog ids for the pinned tree matching (empty: none)
    uint64_t multiset_count = 0;
    uint64_t option_count = 0;
  };

  const Catalog& catalog_for(int a, int b);
  // writes slot i's catalog ids at flat[offset_[i]] .. flat[offset_[i] + copies)
  void decode(uint64_t index, std::vector<int>& flat) const;

  Multigraph g_;
  std::vector<int> h_;
  EnumOptions opts_;
  std::map<std::pair<int, int>, Catalog> catalogs_;
  std::vector<Slot> slots_;
  std::vector<size_t> offset_;
  uint64_t count_ = 0;
};

// Streams covers in index order; fn returns false to stop early.
void enumerate_covers(const Multigraph& g, const std::vector<int>& h, const EnumOptions& opts,
                      const std::function<bool(const Cover&, uint64_t)>& fn);

}  // namespace dpcolor
