#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "packlab/bipartite.hpp"
#include "packlab/perm.hpp"

namespace packlab {

uint64_t count_derangements(int k);

// Number of permutations differing from every given permutation in every
// position; computed as a permanent over the allowed-value matrix.
uint64_t common_derangements(const std::vector<Perm>& perms);
// Oracle: scan all k! candidates directly.
uint64_t common_derangements_brute(const std::vector<Perm>& perms);

// Matrix whose rows are permutations of [k].
struct PermMatrix {
  std::vector<Perm> rows;
};

struct TriplesReport {
  uint64_t pairs_min = 0;              // min over (id, p) pairs
  uint64_t triples_checked = 0;        // (p2, p3) with p1 = id
  uint64_t zero_triples = 0;
  uint64_t exactly_two_triples = 0;
  bool never_exactly_one = false;
  bool exactly_two_always_mutual = false;   // the 2 common derangements derange each other
  bool zero_structure_verified = false;     // 3-cycle-on-3-elements structure
  bool pair_zero_extensions_at_most_two = false;  // per pair, <= 2 zero third rows
  bool pair_zero_extensions_never_mutual = false;
};

// Exhaustive over permutations of [5] with the first row pinned to identity
// (justified by simultaneous conjugation symmetry).
TriplesReport classify_triples_5();

enum class BadTag { I5N3, I5N4, I4N3 };

struct BadPermutation {
  Perm sigma;
  BadTag tag;
};

// All sigma such that the four rows of a plus sigma have no common
// derangement, with the Hall-violator shape of the resulting obstruction.
std::vector<BadPermutation> bad_permutations(const PermMatrix& a);
// Oracle route: direct common-derangement test per sigma, no classification.
std::vector<Perm> bad_permutations_direct(const PermMatrix& a);

// Allowed-value matrix of a stack of permutations: entry (i, v) allowed iff
// no row maps i to v.
BipartiteGraph allowed_matrix(const std::vector<Perm>& perms, int k);

// All permutations of [k] in lexicographic order (k <= 8 intended).
const std::vector<std::array<uint8_t, 8>>& all_perms8();

PermMatrix read_perm_matrix(const std::string& path);
PermMatrix perm_matrix_from_digit_rows(const std::vector<std::string>& rows);  // e.g. "51234786"

}  // namespace packlab
