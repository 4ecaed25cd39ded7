#pragma once

#include <array>

#include "blockseq/ebs.hpp"
#include "blockseq/word.hpp"

namespace blockseq {

// Extended blocksequence of a three-letter word: ((b1, b2, 1), (j1), (s1)).
struct TernaryEbs {
  int b1 = 1;
  int b2 = 1;
  int j1 = 0;
  int s1 = 0;

  Ebs to_ebs() const;
};

// Closed-form normal form (ab)^j1 a (cb)^s1 (ca)^(b1-j1-1) (cb)^(b2-b1-s1+j1).
Word ternary_normal_form(const TernaryEbs& gamma);

// Per-sequence block counts after the first and second marking stage (the
// third is always 1). `simulated` marks the normal form; `closed_form` is
// the arithmetic fast path derived for a nonempty trailing (cb)-run, which
// can disagree when that run is empty (the word then ends with the first
// letter), so simulation is the authoritative value.
struct SequenceTableRow {
  std::array<int, 3> sequence;      // a permutation of 1,2,3
  std::array<int, 2> simulated;
  std::array<int, 2> closed_form;
  std::array<bool, 2> agree;
};

struct SequenceTable {
  std::array<SequenceTableRow, 6> rows;  // permutations in lexicographic order
};

SequenceTable sequence_table(const TernaryEbs& gamma);

struct TernaryOptimum {
  MarkingSequence sequence;       // simulated optimum, lexicographic tie-break
  int value;
  MarkingSequence closed_choice;  // condition-group selection
  int closed_value;               // simulated value of that choice
  bool closed_attains_optimum;
};

// Minimizes the simulated marking number over the six sequences and audits
// the arithmetic condition groups that predict the winner from the ebs.
TernaryOptimum optimal_sequence(const TernaryEbs& gamma);

// True iff the canonical marking number of w equals that of its normal
// form; both share a blocksequence, so this is a consistency probe for the
// ternary pipeline. Requires a ternary word neighbourless w.r.t. the
// canonical marking sequence.
bool loc_canonical_equal(const Word& w);

}  // namespace blockseq
