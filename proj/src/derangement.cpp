#include "packlab/derangement.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace packlab {

uint64_t count_derangements(int k) {
  if (k < 0) throw std::invalid_argument("count_derangements: negative k");
  if (k > 20) throw std::invalid_argument("count_derangements: k > 20 overflows");
  uint64_t a = 1, b = 0;  // D_0, D_1
  if (k == 0) return 1;
  for (int i = 2; i <= k; ++i) {
    uint64_t c = (uint64_t)(i - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

BipartiteGraph allowed_matrix(const std::vector<Perm>& perms, int k) {
  std::vector<uint32_t> forbidden(k, 0);
  for (const auto& p : perms) {
    if ((int)p.size() != k) throw std::invalid_argument("allowed_matrix: size mismatch");
    for (int i = 0; i < k; ++i) forbidden[i] |= 1u << p[i];
  }
  BipartiteGraph g;
  g.n = k;
  uint32_t all = (1u << k) - 1;
  for (int i = 0; i < k; ++i) g.rows.push_back(~forbidden[i] & all);
  return g;
}

uint64_t common_derangements(const std::vector<Perm>& perms) {
  if (perms.empty()) throw std::invalid_argument("common_derangements: empty input");
  return permanent(allowed_matrix(perms, (int)perms[0].size()));
}

uint64_t common_derangements_brute(const std::vector<Perm>& perms) {
  int k = (int)perms[0].size();
  Perm tau = identity_perm(k);
  uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& p : perms) {
      for (int i = 0; i < k && ok; ++i)
        if (tau[i] == p[i]) ok = false;
      if (!ok) break;
    }
    if (ok) ++count;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return count;
}

namespace {

// zero triples have three positions whose forbidden triples coincide as a
// 3-element value set (a Hall violator of shape (3,2) in the allowed matrix)
bool zero_triple_structure(const Perm& p1, const Perm& p2, const Perm& p3) {
  int k = (int)p1.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        uint32_t sa = (1u << p1[a]) | (1u << p2[a]) | (1u << p3[a]);
        uint32_t sb = (1u << p1[b]) | (1u << p2[b]) | (1u << p3[b]);
        uint32_t sc = (1u << p1[c]) | (1u << p2[c]) | (1u << p3[c]);
        if (sa == sb && sb == sc && __builtin_popcount(sa) == 3) return true;
      }
  return false;
}

}  // namespace

TriplesReport classify_triples_5() {
  const PermTable& t = perm_table(5);
  TriplesReport r;
  r.never_exactly_one = true;
  r.exactly_two_always_mutual = true;
  r.zero_structure_verified = true;
  r.pair_zero_extensions_at_most_two = true;
  r.pair_zero_extensions_never_mutual = true;

  const Perm id = identity_perm(5);
  r.pairs_min = UINT64_MAX;
  for (int b = 0; b < t.fact; ++b)
    r.pairs_min = std::min(r.pairs_min, common_derangements({id, t.perms[b]}));

  for (int b = 0; b < t.fact; ++b) {
    const Perm& p2 = t.perms[b];
    std::vector<int> zero_thirds;
    for (int c = 0; c < t.fact; ++c) {
      const Perm& p3 = t.perms[c];
      uint64_t cd = common_derangements({id, p2, p3});
      ++r.triples_checked;
      if (cd == 1) r.never_exactly_one = false;
      if (cd == 0) {
        ++r.zero_triples;
        zero_thirds.push_back(c);
        if (!zero_triple_structure(id, p2, p3)) r.zero_structure_verified = false;
      } else if (cd == 2) {
        ++r.exactly_two_triples;
        // find the two common derangements and check mutual derangement
        std::vector<int> ds;
        for (int d = 0; d < t.fact; ++d) {
          const Perm& tau = t.perms[d];
          if (pointwise_distinct(tau, id) && pointwise_distinct(tau, p2) &&
              pointwise_distinct(tau, p3))
            ds.push_back(d);
        }
        if (ds.size() != 2 || !pointwise_distinct(t.perms[ds[0]], t.perms[ds[1]]))
          r.exactly_two_always_mutual = false;
      }
    }
    if (zero_thirds.size() > 2) r.pair_zero_extensions_at_most_two = false;
    if (zero_thirds.size() == 2 &&
        pointwise_distinct(t.perms[zero_thirds[0]], t.perms[zero_thirds[1]]))
      r.pair_zero_extensions_never_mutual = false;
  }
  return r;
}

const std::vector<std::array<uint8_t, 8>>& all_perms8() {
  static const std::vector<std::array<uint8_t, 8>> perms = [] {
    std::vector<std::array<uint8_t, 8>> v;
    std::array<uint8_t, 8> p;
    std::iota(p.begin(), p.end(), 0);
    do {
      v.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

std::vector<BadPermutation> bad_permutations(const PermMatrix& a) {
  if (a.rows.size() != 4 || a.rows[0].size() != 8)
    throw std::invalid_argument("bad_permutations: need 4 rows over [8]");
  uint32_t base[8];
  for (int i = 0; i < 8; ++i) {
    uint32_t forb = 0;
    for (const auto& row : a.rows) forb |= 1u << row[i];
    base[i] = ~forb & 0xffu;
  }
  std::vector<BadPermutation> bad;
  uint32_t rows[8];
  for (const auto& sigma : all_perms8()) {
    for (int i = 0; i < 8; ++i) rows[i] = base[i] & ~(1u << sigma[i]);
    if (has_perfect_matching(8, rows)) continue;
    // find the Hall violator with smallest (|I|, |N(I)|)
    int besta = 9, bestb = 9;
    for (uint32_t I = 1; I < 256; ++I) {
      uint32_t N = 0;
      uint32_t it = I;
      while (it) {
        N |= rows[__builtin_ctz(it)];
        it &= it - 1;
      }
      int ai = __builtin_popcount(I), bi = __builtin_popcount(N);
      if (bi < ai && (ai < besta || (ai == besta && bi < bestb))) {
        besta = ai;
        bestb = bi;
      }
    }
    BadTag tag;
    if (besta == 4 && bestb == 3)
      tag = BadTag::I4N3;
    else if (besta == 5 && bestb == 3)
      tag = BadTag::I5N3;
    else if (besta == 5 && bestb == 4)
      tag = BadTag::I5N4;
    else
      throw std::logic_error("bad permutation with violator outside (4,3)/(5,3)/(5,4)");
    bad.push_back({Perm(sigma.begin(), sigma.end()), tag});
  }
  return bad;
}

std::vector<Perm> bad_permutations_direct(const PermMatrix& a) {
  std::vector<Perm> bad;
  for (const auto& sigma : all_perms8()) {
    std::vector<Perm> five = a.rows;
    five.push_back(Perm(sigma.begin(), sigma.end()));
    if (common_derangements(five) == 0) bad.push_back(five.back());
  }
  return bad;
}

PermMatrix perm_matrix_from_digit_rows(const std::vector<std::string>& rows) {
  PermMatrix m;
  for (const auto& s : rows) {
    Perm p;
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("perm row: digits 1..9 expected");
      p.push_back(ch - '1');
    }
    if (!is_permutation_of_k(p)) throw std::invalid_argument("perm row: not a permutation");
    m.rows.push_back(p);
  }
  return m;
}

PermMatrix read_perm_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> rows;
  std::string line;
  while (in >> line) rows.push_back(line);
  return perm_matrix_from_digit_rows(rows);
}

}  // namespace packlab
