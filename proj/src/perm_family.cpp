#include "packlab/perm_family.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "packlab/derangement.hpp"

namespace packlab {

namespace {

using P8 = std::array<uint8_t, 8>;
using Rows8 = std::array<uint32_t, 8>;

// dedup by canonical form
struct ClassSet {
  std::map<std::vector<uint32_t>, BipartiteGraph> classes;
  void add(const BipartiteGraph& g) {
    auto key = bipartite_canonical_key(g);
    classes.emplace(key, g);
  }
  uint64_t size() const { return classes.size(); }
  std::vector<BipartiteGraph> graphs() const {
    std::vector<BipartiteGraph> out;
    for (auto& [k, g] : classes) out.push_back(g);
    return out;
  }
};

// tracks the running minimum; canonicalization is deferred so hot loops only
// copy raw row arrays
struct MinTracker {
  uint64_t best = UINT64_MAX;
  std::vector<Rows8> raw;
  void note(uint64_t p, const uint32_t* rows) {
    if (p > best) return;
    if (p < best) {
      best = p;
      raw.clear();
    }
    if (raw.size() < 200000) {
      Rows8 a;
      std::copy(rows, rows + 8, a.begin());
      raw.push_back(a);
    }
  }
  void merge(const MinTracker& o) {
    if (o.best > best) return;
    if (o.best < best) {
      best = o.best;
      raw.clear();
    }
    for (const auto& a : o.raw)
      if (raw.size() < 200000) raw.push_back(a);
  }
  ClassSet finalize() const {
    std::vector<Rows8> u = raw;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    ClassSet cs;
    for (const auto& a : u) cs.add(BipartiteGraph(8, std::vector<uint32_t>(a.begin(), a.end())));
    return cs;
  }
};

// bipartite graph whose edges form disjoint cycles of lengths 2*half[i]
// packed consecutively, plus optionally one extra disjoint edge
BipartiteGraph disjoint_even_cycles(const std::vector<int>& half, bool extra_edge) {
  BipartiteGraph g;
  g.n = 8;
  g.rows.assign(8, 0);
  int off = 0;
  for (int t : half) {
    if (t < 2) throw std::logic_error("even cycles have length >= 4");
    for (int i = 0; i < t; ++i) {
      g.rows[off + i] |= 1u << (off + i);
      g.rows[off + (i + 1) % t] |= 1u << (off + i);
    }
    off += t;
  }
  if (extra_edge) {
    if (off != 7) throw std::logic_error("extra edge needs exactly one spare pair");
    g.rows[7] |= 1u << 7;
    off = 8;
  }
  if (off != 8) throw std::logic_error("cycle lengths must cover all 8 pairs");
  return g;
}

int rank8(const P8& p) {
  static const int fact[8] = {5040, 720, 120, 24, 6, 2, 1, 1};
  int idx = 0;
  for (int i = 0; i < 7; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 8; ++j)
      if (p[j] < p[i]) ++smaller;
    idx += smaller * fact[i];
  }
  return idx;
}

P8 compose8(const P8& a, const P8& b) {
  P8 r;
  for (int i = 0; i < 8; ++i) r[i] = a[b[i]];
  return r;
}

P8 inverse8(const P8& a) {
  P8 r;
  for (int i = 0; i < 8; ++i) r[a[i]] = (uint8_t)i;
  return r;
}

std::vector<int> cycle_type8(const P8& p) {
  std::array<char, 8> seen{};
  std::vector<int> t;
  for (int i = 0; i < 8; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<P8> s8_class_reps() {
  std::map<std::vector<int>, P8> first;
  for (const auto& p : all_perms8()) first.emplace(cycle_type8(p), p);
  std::vector<P8> reps;
  for (auto& [t, p] : first) reps.push_back(p);
  return reps;
}

void allowed_rows(const std::vector<const P8*>& perms, uint32_t rows[8]) {
  for (int i = 0; i < 8; ++i) {
    uint32_t forb = 0;
    for (const P8* p : perms) forb |= 1u << (*p)[i];
    rows[i] = ~forb & 0xffu;
  }
}

// no single edge can be removed without dropping a degree below d
bool edge_minimal(const uint32_t rows[8], int d) {
  int coldeg[8] = {0};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (rows[i] >> j & 1) ++coldeg[j];
  for (int i = 0; i < 8; ++i) {
    if (__builtin_popcount(rows[i]) == d) continue;
    for (int j = 0; j < 8; ++j)
      if ((rows[i] >> j & 1) && coldeg[j] != d) return false;
  }
  return true;
}

bool min_degree_ok(const uint32_t rows[8], int d) {
  int coldeg[8] = {0};
  for (int i = 0; i < 8; ++i) {
    if (__builtin_popcount(rows[i]) < d) return false;
    for (int j = 0; j < 8; ++j)
      if (rows[i] >> j & 1) ++coldeg[j];
  }
  for (int j = 0; j < 8; ++j)
    if (coldeg[j] < d) return false;
  return true;
}

// all d-regular 8x8 biadjacency matrices, first row pinned to the low d bits
// (column relabeling), remaining rows non-increasing (row relabeling)
template <typename F>
uint64_t scan_regular(int d, F&& visit) {
  std::vector<uint32_t> masks;
  for (uint32_t m = 0; m < 256; ++m)
    if (__builtin_popcount(m) == d) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), std::greater<>());
  uint64_t count = 0;
  uint32_t rows[8];
  int coldeg[8] = {0};
  rows[0] = (1u << d) - 1;
  for (int j = 0; j < d; ++j) coldeg[j] = 1;
  auto rec = [&](auto&& self, int t, uint32_t prev) -> void {
    if (t == 8) {
      ++count;
      visit(rows);
      return;
    }
    for (uint32_t m : masks) {
      if (t >= 2 && m > prev) continue;
      bool ok = true;
      for (int j = 0; j < 8 && ok; ++j) {
        if (m >> j & 1) {
          if (coldeg[j] == d) ok = false;
        } else if (coldeg[j] + (7 - t) < d) {
          ok = false;
        }
      }
      if (!ok) continue;
      rows[t] = m;
      for (int j = 0; j < 8; ++j)
        if (m >> j & 1) ++coldeg[j];
      self(self, t + 1, m);
      for (int j = 0; j < 8; ++j)
        if (m >> j & 1) --coldeg[j];
    }
  };
  rec(rec, 1, 0);
  return count;
}

// edge-minimal min-degree-3 graphs without a perfect matching, enumerated
// through their Hall violator: I rows confined to N columns, |I| > |N|,
// degree bounds forcing (|I|, |N|) into {(4,3), (5,3), (5,4)}
std::vector<BipartiteGraph> enumerate_zero_graphs(uint64_t& candidates) {
  ClassSet classes;
  auto consider = [&](const uint32_t rows[8]) {
    ++candidates;
    if (!min_degree_ok(rows, 3)) return;
    if (!edge_minimal(rows, 3)) return;
    BipartiteGraph g(8, std::vector<uint32_t>(rows, rows + 8));
    if (has_perfect_matching(g)) throw std::logic_error("violator construction has a matching");
    classes.add(g);
  };

  // (4,3): rows 0..3 = columns {0,1,2}; each outer column picks a >=3 subset
  // of rows {4..7}; inner columns pick arbitrary extras there
  {
    std::vector<uint32_t> outer_opts;
    for (uint32_t s = 0; s < 16; ++s)
      if (__builtin_popcount(s) >= 3) outer_opts.push_back(s);
    uint32_t rows[8];
    std::array<uint32_t, 5> oc;
    std::array<uint32_t, 3> ic;
    std::function<void(int)> pick_ic = [&](int j) {
      if (j == 3) {
        for (int i = 0; i < 4; ++i) rows[i] = 0b111;
        for (int i = 4; i < 8; ++i) rows[i] = 0;
        for (int jj = 0; jj < 5; ++jj)
          for (int i = 0; i < 4; ++i)
            if (oc[jj] >> i & 1) rows[4 + i] |= 1u << (3 + jj);
        for (int jj = 0; jj < 3; ++jj)
          for (int i = 0; i < 4; ++i)
            if (ic[jj] >> i & 1) rows[4 + i] |= 1u << jj;
        consider(rows);
        return;
      }
      for (uint32_t s = 0; s < 16; ++s) {
        ic[j] = s;
        pick_ic(j + 1);
      }
    };
    std::function<void(int)> pick_oc = [&](int j) {
      if (j == 5) {
        pick_ic(0);
        return;
      }
      for (uint32_t s : outer_opts) {
        oc[j] = s;
        pick_oc(j + 1);
      }
    };
    pick_oc(0);
  }

  // (5,3): rows 0..4 = columns {0,1,2}; outer columns must take all of rows
  // {5,6,7}; inner columns pick extras there
  {
    uint32_t rows[8];
    for (uint32_t a = 0; a < 8; ++a)
      for (uint32_t b = 0; b < 8; ++b)
        for (uint32_t c = 0; c < 8; ++c) {
          for (int i = 0; i < 5; ++i) rows[i] = 0b111;
          for (int i = 5; i < 8; ++i) rows[i] = 0b11111000;
          uint32_t ex[3] = {a, b, c};
          for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
              if (ex[j] >> i & 1) rows[5 + i] |= 1u << j;
          consider(rows);
        }
  }

  // (5,4): rows 0..4 pick >=3 of columns {0,1,2,3}; outer columns must take
  // all of rows {5,6,7}; inner columns pick extras there
  {
    std::vector<uint32_t> row_opts;
    for (uint32_t m = 0; m < 16; ++m)
      if (__builtin_popcount(m) >= 3) row_opts.push_back(m);
    uint32_t rows[8];
    std::array<uint32_t, 5> rsel;
    std::array<uint32_t, 4> ic;
    std::function<void(int)> pick_ic = [&](int j) {
      if (j == 4) {
        for (int i = 0; i < 5; ++i) rows[i] = rsel[i];
        for (int i = 5; i < 8; ++i) rows[i] = 0b11110000;
        for (int jj = 0; jj < 4; ++jj)
          for (int i = 0; i < 3; ++i)
            if (ic[jj] >> i & 1) rows[5 + i] |= 1u << jj;
        consider(rows);
        return;
      }
      for (uint32_t s = 0; s < 8; ++s) {
        ic[j] = s;
        pick_ic(j + 1);
      }
    };
    std::function<void(int)> pick_rows = [&](int i) {
      if (i == 5) {
        pick_ic(0);
        return;
      }
      for (uint32_t m : row_opts) {
        rsel[i] = m;
        pick_rows(i + 1);
      }
    };
    pick_rows(0);
  }

  return classes.graphs();
}

// minimum permanent over minimal matching-creating augmentations of a zero
// graph; a minimal augmentation lies inside every resulting perfect matching,
// so it is itself a matching of missing positions, and every proper subset
// still leaves the permanent at zero, which makes prefix DFS complete
uint64_t min_augmentation_permanent(const BipartiteGraph& z) {
  std::vector<std::pair<int, int>> missing;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(z.rows[i] >> j & 1)) missing.push_back({i, j});
  uint64_t best = UINT64_MAX;
  uint32_t rows[8];
  std::copy(z.rows.begin(), z.rows.end(), rows);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from, uint32_t used_r, uint32_t used_c) -> void {
    for (int e = from; e < (int)missing.size(); ++e) {
      auto [i, j] = missing[e];
      if ((used_r >> i & 1) || (used_c >> j & 1)) continue;
      rows[i] |= 1u << j;
      chosen.push_back(e);
      uint64_t p = permanent8(rows);
      if (p > 0) {
        bool minimal = true;
        for (int idx : chosen) {
          auto [a, b] = missing[idx];
          rows[a] &= ~(1u << b);
          if (permanent8(rows) > 0) minimal = false;
          rows[a] |= 1u << b;
          if (!minimal) break;
        }
        if (minimal) best = std::min(best, p);
        // supersets of a matching-creating set are never minimal
      } else {
        self(self, e + 1, used_r | (1u << i), used_c | (1u << j));
      }
      rows[i] &= ~(1u << j);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

// every edge-minimal min-degree-3 graph, rows non-increasing; every column a
// degree->=4 row touches is locked to final degree exactly 3
template <typename F>
bool scan_edge_minimal3(uint64_t node_budget, uint64_t& leaves, F&& visit) {
  std::vector<uint32_t> masks;
  for (uint32_t m = 255; m >= 7; --m)
    if (__builtin_popcount(m) >= 3) masks.push_back(m);
  uint32_t rows[8];
  int coldeg[8] = {0};
  uint64_t nodes = 0;
  bool ok = true;
  auto rec = [&](auto&& self, int t, uint32_t prev, uint32_t locked) -> void {
    if (!ok) return;
    if (++nodes > node_budget) {
      ok = false;
      return;
    }
    if (t == 8) {
      for (int j = 0; j < 8; ++j)
        if (coldeg[j] < 3) return;
      ++leaves;
      visit(rows);
      return;
    }
    int rem = 8 - t;  // rows still to place, including this one
    for (uint32_t m : masks) {
      if (t >= 1 && m > prev) continue;
      bool heavy = __builtin_popcount(m) >= 4;
      uint32_t lk = heavy ? (locked | m) : locked;
      bool feasible = true;
      int locked_cap = 0, unlocked_cnt = 0;
      for (int j = 0; j < 8 && feasible; ++j) {
        int cd = coldeg[j] + (m >> j & 1);
        if (lk >> j & 1) {
          if (cd > 3) {
            feasible = false;
            break;
          }
          locked_cap += 3 - cd;
        } else {
          ++unlocked_cnt;
        }
        if (!(m >> j & 1) && cd + (rem - 1) < 3) feasible = false;
      }
      if (!feasible) continue;
      // remaining rows need 3 edges each, landing in locked slack or
      // unlocked columns
      if (3 * (rem - 1) > locked_cap + unlocked_cnt * (rem - 1)) continue;
      rows[t] = m;
      for (int j = 0; j < 8; ++j)
        if (m >> j & 1) ++coldeg[j];
      self(self, t + 1, m, lk);
      for (int j = 0; j < 8; ++j)
        if (m >> j & 1) --coldeg[j];
      if (!ok) return;
    }
  };
  rec(rec, 0, 0, 0);
  return ok;
}

}  // namespace

FamilyReport min_permanent_family(int d, bool full_tier, uint64_t budget) {
  FamilyReport r;
  r.d = d;
  MinTracker tracker;

  if (d == 6) {
    // complements of edge-minimal min-degree-6 graphs are unions of even
    // cycles covering all 16 vertices, or covering 14 with one extra edge
    std::vector<std::pair<std::vector<int>, bool>> family = {
        {{8}, false},       {{6, 2}, false},    {{5, 3}, false}, {{4, 4}, false},
        {{4, 2, 2}, false}, {{3, 3, 2}, false}, {{2, 2, 2, 2}, false},
        {{7}, true},        {{5, 2}, true},     {{4, 3}, true},  {{3, 2, 2}, true}};
    ClassSet distinct;
    for (auto& [half, extra] : family) {
      BipartiteGraph g = disjoint_even_cycles(half, extra).complement();
      if (g.min_degree() < 6 || !edge_minimal(g.rows.data(), 6))
        throw std::logic_error("d=6 family member not edge-minimal min-degree-6");
      distinct.add(g);
      ++r.graphs_checked;
      tracker.note(permanent(g), g.rows.data());
    }
    if (distinct.size() != 11) throw std::logic_error("d=6 family must have 11 classes");
    r.complete = true;
    r.notes = "complement family: unions of even cycles on 16 vertices, or on 14 plus one edge";
  } else if (d == 5) {
    // all triples: first fixed to identity (row relabeling), second to a
    // conjugacy class representative (simultaneous conjugation)
    P8 id;
    std::iota(id.begin(), id.end(), 0);
    uint32_t rows[8];
    for (const auto& rep : s8_class_reps()) {
      for (const auto& p3 : all_perms8()) {
        allowed_rows({&id, &rep, &p3}, rows);
        uint64_t p = permanent8(rows);
        ++r.graphs_checked;
        if (p == 0) throw std::logic_error("a triple with no common derangement");
        tracker.note(p, rows);
      }
    }
    r.complete = true;
    r.notes = "all permutation triples via conjugacy reduction";
  } else if (d == 4) {
    if (!full_tier) {
      r.graphs_checked +=
          scan_regular(4, [&](const uint32_t* rows) { tracker.note(permanent8(rows), rows); });
      // seeded randomized sweep over edge-minimal min-degree-4 graphs
      std::mt19937 rng(20240817);
      for (int iter = 0; iter < 20000; ++iter) {
        uint32_t rows[8];
        std::fill(rows, rows + 8, 0xffu);
        for (;;) {
          std::vector<std::pair<int, int>> removable;
          int coldeg[8] = {0};
          for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
              if (rows[i] >> j & 1) ++coldeg[j];
          for (int i = 0; i < 8; ++i)
            if (__builtin_popcount(rows[i]) >= 5)
              for (int j = 0; j < 8; ++j)
                if ((rows[i] >> j & 1) && coldeg[j] >= 5) removable.push_back({i, j});
          if (removable.empty()) break;
          auto [i, j] = removable[rng() % removable.size()];
          rows[i] &= ~(1u << j);
        }
        ++r.graphs_checked;
        uint64_t p = permanent8(rows);
        if (p == 0) throw std::logic_error("min-degree-4 graph without a matching");
        tracker.note(p, rows);
      }
      r.complete = false;
      r.notes = "4-regular family exhausted plus a seeded random edge-minimal sweep; "
                "full tier exhausts all quadruples";
    } else {
      // all quadruples: identity, conjugacy class rep, third up to the
      // centralizer of the rep, fourth unrestricted
      P8 id;
      std::iota(id.begin(), id.end(), 0);
      const auto& s8 = all_perms8();
      bool truncated = false;
      for (const auto& rep : s8_class_reps()) {
        std::vector<P8> cent;
        for (const auto& g : s8)
          if (compose8(g, rep) == compose8(rep, g)) cent.push_back(g);
        std::vector<char> visited(40320, 0);
        std::vector<int> orbit_reps;
        for (int p = 0; p < 40320; ++p) {
          if (visited[p]) continue;
          orbit_reps.push_back(p);
          for (const auto& g : cent)
            visited[rank8(compose8(compose8(g, s8[p]), inverse8(g)))] = 1;
        }
        int nreps = (int)orbit_reps.size();
        bool bad_quadruple = false;
#pragma omp parallel
        {
          MinTracker local;
          uint64_t checked = 0;
#pragma omp for schedule(dynamic, 16)
          for (int oi = 0; oi < nreps; ++oi) {
            const P8& p3 = s8[orbit_reps[oi]];
            uint32_t base[8];
            allowed_rows({&id, &rep, &p3}, base);
            uint32_t rows[8];
            for (const auto& p4 : s8) {
              for (int i = 0; i < 8; ++i) rows[i] = base[i] & ~(1u << p4[i]);
              uint64_t p = permanent8(rows);
              ++checked;
              if (p == 0)
                bad_quadruple = true;
              else
                local.note(p, rows);
            }
          }
#pragma omp critical
          {
            r.graphs_checked += checked;
            tracker.merge(local);
          }
        }
        if (bad_quadruple) throw std::logic_error("a quadruple with no common derangement");
        if (r.graphs_checked >= budget) truncated = true;
        if (truncated) break;
      }
      r.complete = !truncated;
      r.notes = "all permutation quadruples via conjugacy and centralizer-orbit reduction";
    }
  } else if (d == 3) {
    uint64_t candidates = 0;
    auto zeros = enumerate_zero_graphs(candidates);
    r.zero_classes = zeros.size();
    r.zero_graphs = zeros;
    r.min_augmented = UINT64_MAX;
    for (const auto& z : zeros)
      r.min_augmented = std::min(r.min_augmented, min_augmentation_permanent(z));

    MinTracker regular;
    uint64_t scanned = scan_regular(3, [&](const uint32_t* rows) {
      uint64_t p = permanent8(rows);
      if (p > 0) regular.note(p, rows);
    });
    r.graphs_checked = candidates + scanned;
    r.regular_attaining_classes = regular.finalize().size();

    if (full_tier) {
      uint64_t leaves = 0;
      bool finished = scan_edge_minimal3(budget, leaves, [&](const uint32_t* rows) {
        uint64_t p = permanent8(rows);
        if (p > 0) tracker.note(p, rows);
      });
      r.graphs_checked += leaves;
      r.complete = finished;
      r.notes = "zero classes, minimal augmentations, and the full edge-minimal "
                "min-degree-3 scan";
    } else {
      tracker = regular;
      r.complete = false;
      r.notes = "zero classes, minimal augmentations, and the 3-regular family; full tier "
                "adds the non-regular edge-minimal scan";
    }
  } else {
    throw std::invalid_argument("min_permanent_family: d must be 3..6");
  }

  r.min_permanent = tracker.best;
  ClassSet attaining = tracker.finalize();
  r.attaining = attaining.graphs();
  r.attaining_classes = attaining.size();
  return r;
}

}  // namespace packlab
