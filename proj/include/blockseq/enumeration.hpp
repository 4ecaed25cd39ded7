#pragma once

#include <vector>

#include "blockseq/locality.hpp"
#include "blockseq/word.hpp"

namespace blockseq {

// Per-transition letter demand: moving from y marked blocks to x needs
// |x - y| letters when the counts differ and one letter when they are equal.
int delta(int current, int previous);

struct DeltaTable {
  BlockSequence beta;       // with the trailing 1 as given
  std::vector<int> deltas;  // deltas[i] = delta(b_{i+1}, b_i), b_0 = 0
};

DeltaTable delta_table(const BlockSequence& beta);

// Minimum length of any word whose canonical blocksequence is beta: the sum
// of the per-transition demands.
int n_beta(const BlockSequence& beta);

// One shortest word realizing beta, assembled block by block: an equal
// count appends the new letter to the first block, a drop joins the
// leading blocks, a rise appends singleton blocks.
Word shortest_word(const BlockSequence& beta);

inline constexpr int kEnumerationLengthCap = 15;

// All words of length n_beta(beta) realizing beta, duplicate-free and
// lexicographically sorted. Backtracks over the assembly choices: which
// block absorbs the equal-count letter (either end), which block pairs are
// joined on a drop, and how fresh singleton blocks interleave on a rise.
std::vector<Word> enumerate_shortest(const BlockSequence& beta,
                                     int length_cap = kEnumerationLengthCap);

// All condensed words of length <= max_len realizing beta. Extends the
// shortest-word assembly with optional single-letter attachments at block
// ends, arbitrary join subsets, and fresh singleton blocks under a length
// budget.
std::vector<Word> enumerate_condensed(const BlockSequence& beta, int max_len,
                                      int length_cap = kEnumerationLengthCap);

}  // namespace blockseq
