#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "blockseq/word.hpp"

namespace blockseq {

// One census row: a neighbourless word, its exact locality, the locality of
// its normal form, and the arithmetic ceiling loc(nf) + sum(2*j_i + s_i) + l
// on loc(w).
struct GapRow {
  Word word;
  int loc = 0;
  int loc_normal_form = 0;
  int bound = 0;

  int diff() const { return loc - loc_normal_form; }
};

struct GapReport {
  int alphabet = 0;
  bool exhaustive = true;
  int max_len = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<GapRow> rows;  // sorted by (length, word)
  int max_abs_diff = 0;
};

// Every neighbourless word over exactly 1..alphabet up to max_len.
// Exhaustive mode is limited to alphabets of size at most 4.
GapReport gap_census_exhaustive(int alphabet, int max_len);

// Seeded sample of neighbourless words with odd lengths in
// [min_len, max_len]; identical seeds give identical reports.
GapReport gap_census_sampled(int alphabet, int samples, std::uint64_t seed,
                             int min_len, int max_len);

// Fixed CSV layout with a version header comment; byte-stable for equal
// reports.
void write_gap_csv(std::ostream& out, const GapReport& report);

}  // namespace blockseq
