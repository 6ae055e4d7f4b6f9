#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace packlab {

enum class VerifyStatus { VERIFIED, REFUTED, TIMEOUT };

std::string status_name(VerifyStatus s);

struct VerificationReport {
  std::string lemma_id;
  VerifyStatus status = VerifyStatus::TIMEOUT;
  uint64_t cases_checked = 0;
  double elapsed_seconds = 0;
  std::string witness;        // REFUTED: replayable case description
  uint64_t resume_index = 0;  // TIMEOUT: continue the enumeration from here
  std::string detail;

  bool verified() const { return status == VerifyStatus::VERIFIED; }
};

// Extension of 4-packings across an induced C3 or P3 whose vertices have
// degree 3, for every prepacking of the outside neighbors; includes the list
// variant where the triangle has degrees 3, 3, 4.
VerificationReport verify_C3P3_lemma();

// Local step for two disjoint 3-correspondence-colorings: on a degree-(2,3,2)
// path with identity matchings, every prepacking of the outside neighbors
// leaves exactly one blocked middle choice per endpoint and always extends.
VerificationReport verify_g8_two_colorings();

// Safe column counts at the far hub of G(7,3,3)+: for every matching class on
// the long chord the number of hub choices surviving all interior completions
// is 2, 3, 4 or 9, with 9 exactly for the identity class.
VerificationReport verify_g733();

// Exhaustive symmetry-reduced enumeration of full 4-fold covers of the named
// graph (A+, G6+, or the K4 sanity case); every cover must pack.
VerificationReport verify_small_k24(const std::string& name, uint64_t budget = UINT64_MAX,
                                    uint64_t start_index = 0, int jobs = 1);

// Every prepacking of two adjacent same-list vertices of C_n extends, over
// all 3-list systems up to color relabeling; requires 3 <= n <= 7.
VerificationReport verify_cycle_prepacking(int n);

struct LemmaEntry {
  std::string id;
  std::string description;
  bool fast_tier = false;  // included in the fast run_all tier
};

// Stable IDs accepted by verify_by_id and the CLI.
const std::vector<LemmaEntry>& lemma_table();

VerificationReport verify_by_id(const std::string& id, uint64_t budget = UINT64_MAX,
                                uint64_t start_index = 0, int jobs = 1);

// tier is "fast" or "full"; throws std::invalid_argument otherwise.
std::vector<VerificationReport> run_all(const std::string& tier, uint64_t budget = UINT64_MAX,
                                        int jobs = 1);

}  // namespace packlab
