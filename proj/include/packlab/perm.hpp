#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace packlab {

// Permutation of {0..k-1}, stored as the image sequence.
using Perm = std::vector<int>;

inline bool is_permutation_of_k(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= (int)p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm identity_perm(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  // (a o b)[i] = a[b[i]]
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
  return r;
}

inline bool pointwise_distinct(const Perm& a, const Perm& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) return false;
  return true;
}

// Bitmask over permutation indices; supports k <= 5 (120 bits).
struct Mask128 {
  uint64_t w0 = 0, w1 = 0;
  void set(int i) { (i < 64 ? w0 : w1) |= (uint64_t)1 << (i & 63); }
  bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1; }
  bool empty() const { return w0 == 0 && w1 == 0; }
  Mask128& operator&=(const Mask128& o) {
    w0 &= o.w0;
    w1 &= o.w1;
    return *this;
  }
  friend Mask128 operator&(Mask128 a, const Mask128& b) { return a &= b; }
  int count() const { return __builtin_popcountll(w0) + __builtin_popcountll(w1); }
  int first() const {
    if (w0) return __builtin_ctzll(w0);
    if (w1) return 64 + __builtin_ctzll(w1);
    return -1;
  }
  int next(int i) const {
    // smallest set bit > i, or -1
    for (int j = i + 1; j < 128; ++j) {
      if (j < 64) {
        uint64_t rest = w0 & ~(((uint64_t)1 << j) - 1);
        if (rest) return __builtin_ctzll(rest);
        j = 63;
      } else {
        uint64_t rest = w1 & (j == 64 ? ~0ull : ~(((uint64_t)1 << (j - 64)) - 1));
        if (rest) return 64 + __builtin_ctzll(rest);
        return -1;
      }
    }
    return -1;
  }
  bool operator==(const Mask128&) const = default;
};

inline Mask128 full_mask(int bits) {
  Mask128 m;
  if (bits >= 64) {
    m.w0 = ~0ull;
    if (bits > 64) m.w1 = (bits >= 128) ? ~0ull : (((uint64_t)1 << (bits - 64)) - 1);
  } else if (bits > 0) {
    m.w0 = ((uint64_t)1 << bits) - 1;
  }
  return m;
}

// Shared lookup tables for S_k, k <= 5. Permutations in lexicographic order.
struct PermTable {
  int k = 0;
  int fact = 1;
  std::vector<Perm> perms;                 // lex order
  std::vector<int> inv;                    // inv[a] = index of perms[a]^{-1}
  std::vector<std::vector<int>> comp;      // comp[a][b] = index of perms[a] o perms[b]
  std::vector<Mask128> derange;            // derange[a] = {b : perms[a][i] != perms[b][i] for all i}
  std::vector<int> class_reps;             // lex-least index per conjugacy class, sorted

  int index_of(const Perm& p) const {
    // rank in lex order via factorial number system
    int idx = 0;
    std::vector<int> rem(p.begin(), p.end());
    for (int i = 0; i < k; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < k; ++j)
        if (rem[j] < rem[i]) ++smaller;
      int f = 1;
      for (int t = 2; t <= k - 1 - i; ++t) f *= t;
      idx += smaller * f;
    }
    return idx;
  }
};

const PermTable& perm_table(int k);

// Sorted cycle type of a permutation, e.g. (0 1)(2) -> {1,2}.
std::vector<int> cycle_type(const Perm& p);

}  // namespace packlab
