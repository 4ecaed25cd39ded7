#pragma once

#include <vector>

#include "blockseq/word.hpp"

namespace blockseq {

// Per-stage marked block counts under one marking sequence. The last entry
// is always 1 and the first equals the occurrence count of the first
// marked letter.
using BlockSequence = std::vector<int>;

BlockSequence blocksequence(const Word& w, const MarkingSequence& sigma);

// Maximum of the blocksequence: the largest number of marked blocks seen
// while marking w with sigma.
int marking_number(const Word& w, const MarkingSequence& sigma);

struct LocalityResult {
  int value;
  MarkingSequence witness;
};

// Exact locality via branch-and-bound over all marking sequences: a prefix
// whose running block maximum already reaches the incumbent cannot improve
// it and is cut. The witness is the lexicographically smallest optimal
// sequence. Alphabets larger than `alphabet_cap` are refused.
inline constexpr int kLocalityAlphabetCap = 10;

LocalityResult locality(const Word& w, int alphabet_cap = kLocalityAlphabetCap);

bool is_k_local(const Word& w, int k, int alphabet_cap = kLocalityAlphabetCap);

}  // namespace blockseq
