#include "dpcolor/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dpcolor {

namespace {

constexpr uint64_t kCatalogCap = 2'000'000;

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > CoverSpace::kCountCap / b) return CoverSpace::kCountCap;
  return a * b;
}

// C(m + f - 1, f), saturating: number of multisets of size f over m symbols.
uint64_t multiset_count(uint64_t m, int f) {
  if (f == 0) return 1;
  if (m == 0) return 0;
  unsigned __int128 r = 1;
  const unsigned __int128 n = m + f - 1;
  for (int i = 1; i <= f; ++i) {
    r = r * (n - f + i) / i;
    if (r > CoverSpace::kCountCap) return CoverSpace::kCountCap;
  }
  return uint64_t(r);
}

Matching canonical_matching(Matching m, int a, int b) {
  std::sort(m.begin(), m.end());
  std::set<int> js;
  for (size_t x = 0; x < m.size(); ++x) {
    auto [i, j] = m[x];
    if (i < 0 || i >= a || j < 0 || j >= b)
      throw std::invalid_argument("cover: matching index out of range");
    if (x > 0 && m[x - 1].first == i)
      throw std::invalid_argument("cover: repeated color on one side of a matching");
    if (!js.insert(j).second)
      throw std::invalid_argument("cover: repeated color on one side of a matching");
  }
  return m;
}

}  // namespace

Cover build_cover(Multigraph g, std::vector<int> list_sizes,
                  std::vector<std::vector<Matching>> matchings) {
  if (int(list_sizes.size()) != g.n())
    throw std::invalid_argument("cover: one list size per vertex required");
  for (int s : list_sizes)
    if (s < 0) throw std::invalid_argument("cover: negative list size");
  if (matchings.size() != size_t(g.pair_count()))
    throw std::invalid_argument("cover: one matching vector per adjacent pair required");
  for (int p = 0; p < g.pair_count(); ++p) {
    const auto& e = g.pairs()[p];
    if (int(matchings[p].size()) != e.mult)
      throw std::invalid_argument("cover: matching count must equal edge multiplicity");
    for (auto& m : matchings[p]) m = canonical_matching(std::move(m), list_sizes[e.u], list_sizes[e.v]);
  }
  return {std::move(g), std::move(list_sizes), std::move(matchings)};
}

Cover blowup_cover(const Cover& c, int q) {
  if (q < 1) throw std::invalid_argument("blowup_cover: q must be >= 1");
  std::vector<EdgeSlot> es = c.g.pairs();
  for (auto& e : es) e.mult *= q;
  Multigraph g2 = Multigraph::build(c.g.n(), std::move(es));

  std::vector<int> sizes2(c.list_sizes);
  for (auto& s : sizes2) s *= q;

  std::vector<std::vector<Matching>> ms2(g2.pair_count());
  for (int p = 0; p < c.g.pair_count(); ++p)
    for (const Matching& m : c.matchings[p])
      for (int t = 0; t < q; ++t) {
        Matching mm;
        for (auto [i, j] : m)
          for (int a = 0; a < q; ++a) mm.push_back({i * q + a, j * q + (a + t) % q});
        std::sort(mm.begin(), mm.end());
        ms2[p].push_back(std::move(mm));
      }
  return build_cover(std::move(g2), std::move(sizes2), std::move(ms2));
}

Cover cover_from_lists(const Multigraph& g, const std::vector<std::vector<std::string>>& lists) {
  if (!g.is_simple()) throw std::invalid_argument("cover_from_lists: graph must be simple");
  if (int(lists.size()) != g.n())
    throw std::invalid_argument("cover_from_lists: one list per vertex required");
  std::vector<int> sizes;
  for (const auto& l : lists) {
    std::set<std::string> seen(l.begin(), l.end());
    if (seen.size() != l.size())
      throw std::invalid_argument("cover_from_lists: duplicate color in a list");
    sizes.push_back(int(l.size()));
  }
  std::vector<std::vector<Matching>> ms(g.pair_count());
  for (int p = 0; p < g.pair_count(); ++p) {
    const auto& e = g.pairs()[p];
    Matching m;
    for (int i = 0; i < sizes[e.u]; ++i)
      for (int j = 0; j < sizes[e.v]; ++j)
        if (lists[e.u][i] == lists[e.v][j]) m.push_back({i, j});
    ms[p] = {std::move(m)};
  }
  return build_cover(g, std::move(sizes), std::move(ms));
}

Cover hard_cover(HardFamily fam, int t, int q) {
  if (q < 1) throw std::invalid_argument("hard_cover: q must be >= 1");
  Multigraph g;
  int size = 0;
  switch (fam) {
    case HardFamily::even_cycle:
      if (t < 2) throw std::invalid_argument("hard_cover: even cycle needs t >= 2");
      g = cycle_multiple(2 * t, 1);
      size = 2;
      break;
    case HardFamily::clique:
      if (t < 1) throw std::invalid_argument("hard_cover: clique needs t >= 1");
      g = clique_multiple(t, 1);
      size = t - 1;
      break;
    case HardFamily::odd_cycle:
      if (t < 1) throw std::invalid_argument("hard_cover: odd cycle needs t >= 1");
      g = cycle_multiple(2 * t + 1, 1);
      size = 2;
      break;
  }
  Matching ident;
  for (int i = 0; i < size; ++i) ident.push_back({i, i});
  std::vector<std::vector<Matching>> ms(g.pair_count(), {ident});
  if (fam == HardFamily::even_cycle) {
    // twist the wrap-around edge so the conflict graph is one long cycle
    int p = g.pair_index(0, 2 * t - 1);
    ms[p] = {Matching{{0, 1}, {1, 0}}};
  }
  std::vector<int> sizes(size_t(g.n()), size);
  Cover c = build_cover(std::move(g), std::move(sizes), std::move(ms));
  return q == 1 ? c : blowup_cover(c, q);
}

// ---- cover isomorphism ----

namespace {

Matching slot_union(const std::vector<Matching>& ms) {
  std::set<std::pair<int, int>> u;
  for (const auto& m : ms) u.insert(m.begin(), m.end());
  return Matching(u.begin(), u.end());
}

bool extend(const Cover& a, const Cover& b, const std::vector<Matching>& ua,
            const std::vector<Matching>& ub, std::vector<std::vector<int>>& pi, int v) {
  const int n = a.g.n();
  if (v == n) return true;
  std::vector<int> perm(a.list_sizes[v]);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    pi[v] = perm;
    bool ok = true;
    for (int p : a.g.incident_pairs(v)) {
      const auto& e = a.g.pairs()[p];
      int w = e.u == v ? e.v : e.u;
      if (w > v) continue;  // not assigned yet (w == v impossible)
      Matching mapped;
      for (auto [i, j] : ua[p]) mapped.push_back({pi[e.u][i], pi[e.v][j]});
      std::sort(mapped.begin(), mapped.end());
      if (mapped != ub[p]) {
        ok = false;
        break;
      }
    }
    if (ok && extend(a, b, ua, ub, pi, v + 1)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  pi[v].clear();
  return false;
}

}  // namespace

bool covers_isomorphic(const Cover& a, const Cover& b) {
  if (!(a.g == b.g) || a.list_sizes != b.list_sizes) return false;
  std::vector<Matching> ua, ub;
  for (int p = 0; p < a.g.pair_count(); ++p) {
    ua.push_back(slot_union(a.matchings[p]));
    ub.push_back(slot_union(b.matchings[p]));
    if (ua.back().size() != ub.back().size()) return false;
  }
  std::vector<std::vector<int>> pi(a.g.n());
  return extend(a, b, ua, ub, pi, 0);
}

// ---- enumeration ----

namespace {

// All matchings between [a] and [b] in a fixed order: depth-first over left
// indices, partners ascending before "skip". In maximal mode only matchings of
// size min(a,b) are emitted, and the identity injection comes first.
void gen_matchings(int a, int b, bool maximal, std::vector<Matching>& out) {
  const int need = std::min(a, b);
  Matching cur;
  uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == a) {
      if (!maximal || int(cur.size()) == need) {
        if (out.size() >= kCatalogCap)
          throw BudgetExceeded("cover enumeration: matching catalog too large");
        out.push_back(cur);
      }
      return;
    }
    for (int j = 0; j < b; ++j)
      if (!(used >> j & 1)) {
        used |= uint64_t(1) << j;
        cur.push_back({i, j});
        self(self, i + 1);
        cur.pop_back();
        used &= ~(uint64_t(1) << j);
      }
    if (!maximal || a - (i + 1) >= need - int(cur.size())) self(self, i + 1);
  };
  rec(rec, 0);
}

}  // namespace

const CoverSpace::Catalog& CoverSpace::catalog_for(int a, int b) {
  auto key = std::pair{a, b};
  auto it = catalogs_.find(key);
  if (it != catalogs_.end()) return it->second;
  if (a > 64 || b > 64) throw BudgetExceeded("cover enumeration: list sizes above 64 unsupported");
  std::vector<Matching> ms;
  gen_matchings(a, b, opts_.maximal_only, ms);
  Catalog cat;
  for (auto& m : ms) {
    CatalogEntry e;
    e.fwd.assign(size_t(a), 0);
    e.bwd.assign(size_t(b), 0);
    for (auto [i, j] : m) {
      e.fwd[i] |= uint64_t(1) << j;
      e.bwd[j] |= uint64_t(1) << i;
    }
    e.m = std::move(m);
    cat.entries.push_back(std::move(e));
  }
  return catalogs_.emplace(key, std::move(cat)).first->second;
}

CoverSpace::CoverSpace(Multigraph g, std::vector<int> h, EnumOptions opts)
    : g_(std::move(g)), h_(std::move(h)), opts_(opts) {
  if (int(h_.size()) != g_.n()) throw std::invalid_argument("cover enumeration: one list size per vertex");
  for (int x : h_)
    if (x < 0) throw std::invalid_argument("cover enumeration: negative list size");
  if (opts_.tree_normalized && !opts_.maximal_only)
    throw std::invalid_argument("cover enumeration: tree normalization requires maximal matchings");

  // spanning forest (BFS from the least vertex of each component)
  std::vector<int> parent(g_.n(), -2);
  std::vector<int> tree_child(g_.pair_count(), -1);
  if (opts_.tree_normalized) {
    for (int root = 0; root < g_.n(); ++root) {
      if (parent[root] != -2) continue;
      parent[root] = -1;
      std::vector<int> queue{root};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int p : g_.incident_pairs(v)) {
          const auto& e = g_.pairs()[p];
          int w = e.u == v ? e.v : e.u;
          if (parent[w] == -2) {
            parent[w] = v;
            tree_child[p] = w;
            queue.push_back(w);
          }
        }
      }
    }
  }

  count_ = 1;
  for (int p = 0; p < g_.pair_count(); ++p) {
    const auto& e = g_.pairs()[p];
    Slot slot;
    slot.pair = p;
    slot.catalog = &catalog_for(h_[e.u], h_[e.v]);
    const auto& entries = slot.catalog->entries;

    if (tree_child[p] >= 0) {
      const int child = tree_child[p];
      const int P = h_[child == e.v ? e.u : e.v], C = h_[child];
      if (C >= P) {
        // relabeling the child pins the matching to the identity injection
        Matching ident;
        for (int i = 0; i < std::min(h_[e.u], h_[e.v]); ++i) ident.push_back({i, i});
        for (int id = 0; id < int(entries.size()); ++id)
          if (entries[id].m == ident) {
            slot.frozen.push_back(id);
            break;
          }
      } else {
        // child side smaller: only its order can be normalized, leaving the
        // increasing injections into the parent's list
        for (int id = 0; id < int(entries.size()); ++id) {
          const Matching& m = entries[id].m;
          bool incr = true;
          for (size_t x = 1; x < m.size(); ++x) incr = incr && m[x - 1].second < m[x].second;
          if (incr) slot.frozen.push_back(id);
        }
      }
      if (slot.frozen.empty()) throw std::logic_error("cover enumeration: no canonical tree matching");
    }

    slot.copies = e.mult;
    slot.free_copies = e.mult - (slot.frozen.empty() ? 0 : 1);
    slot.multiset_count = multiset_count(entries.size(), slot.free_copies);
    uint64_t frozen_count = slot.frozen.empty() ? 1 : slot.frozen.size();
    slot.option_count = sat_mul(frozen_count, slot.multiset_count);
    count_ = sat_mul(count_, slot.option_count);
    offset_.push_back(p == 0 ? 0 : offset_[p - 1] + slots_[p - 1].copies);
    slots_.push_back(std::move(slot));
  }
}

void CoverSpace::decode(uint64_t index, std::vector<int>& flat) const {
  flat.resize(slots_.empty() ? 0 : offset_.back() + slots_.back().copies);
  // odometer: the last slot varies fastest
  for (int si = int(slots_.size()) - 1; si >= 0; --si) {
    const Slot& slot = slots_[si];
    uint64_t opt = index % slot.option_count;
    index /= slot.option_count;
    int* ids = flat.data() + offset_[si];
    uint64_t ms = opt;
    if (!slot.frozen.empty()) {
      *ids++ = slot.frozen[size_t(opt / slot.multiset_count)];
      ms = opt % slot.multiset_count;
    }
    // unrank the non-decreasing tuple of catalog ids
    const uint64_t m = slot.catalog->entries.size();
    int lo = 0;
    for (int left = slot.free_copies; left > 0; --left) {
      for (int x = lo;; ++x) {
        uint64_t c = multiset_count(m - x, left - 1);
        if (ms < c) {
          *ids++ = x;
          lo = x;
          break;
        }
        ms -= c;
      }
    }
  }
}

Cover CoverSpace::materialize(uint64_t index) const {
  if (index >= count_) throw std::out_of_range("cover index out of range");
  std::vector<int> flat;
  decode(index, flat);
  std::vector<std::vector<Matching>> ms(slots_.size());
  for (size_t si = 0; si < slots_.size(); ++si)
    for (int c = 0; c < slots_[si].copies; ++c)
      ms[si].push_back(slots_[si].catalog->entries[flat[offset_[si] + c]].m);
  return build_cover(g_, h_, std::move(ms));
}

ConflictTable CoverSpace::make_table() const {
  ConflictTable ct;
  ct.n = g_.n();
  ct.sizes = h_;
  ct.slots.resize(g_.pair_count());
  ct.ends.resize(g_.pair_count());
  for (int p = 0; p < g_.pair_count(); ++p) {
    ct.slots[p].fwd.assign(size_t(h_[g_.pairs()[p].u]), 0);
    ct.slots[p].bwd.assign(size_t(h_[g_.pairs()[p].v]), 0);
    ct.ends[p] = {g_.pairs()[p].u, g_.pairs()[p].v};
  }
  return ct;
}

void CoverSpace::fill_conflicts(uint64_t index, ConflictTable& ct, std::vector<int>& scratch) const {
  decode(index, scratch);
  for (size_t si = 0; si < slots_.size(); ++si) {
    auto& sm = ct.slots[si];
    std::fill(sm.fwd.begin(), sm.fwd.end(), 0);
    std::fill(sm.bwd.begin(), sm.bwd.end(), 0);
    for (int c = 0; c < slots_[si].copies; ++c) {
      const auto& e = slots_[si].catalog->entries[scratch[offset_[si] + c]];
      for (size_t i = 0; i < sm.fwd.size(); ++i) sm.fwd[i] |= e.fwd[i];
      for (size_t j = 0; j < sm.bwd.size(); ++j) sm.bwd[j] |= e.bwd[j];
    }
  }
}

void enumerate_covers(const Multigraph& g, const std::vector<int>& h, const EnumOptions& opts,
                      const std::function<bool(const Cover&, uint64_t)>& fn) {
  CoverSpace space(g, h, opts);
  for (uint64_t i = 0; i < space.count(); ++i)
    if (!fn(space.materialize(i), i)) return;
}

}  // namespace dpcolor
