#pragma once

#include <random>
#include <vector>

#include "blockseq/word.hpp"

namespace blockseq {

// All condensed words of the given length using every letter 1..alphabet,
// in lexicographic order.
std::vector<Word> all_condensed_words(int alphabet, int length);

// All words of the given length over exactly 1..alphabet that are
// neighbourless w.r.t. the canonical marking sequence (equivalently, every
// even position is a strict local maximum), in lexicographic order. Empty
// for even lengths.
std::vector<Word> all_neighbourless_words(int alphabet, int length);

// One random word of odd `length` over exactly 1..alphabet, neighbourless
// w.r.t. the canonical marking sequence. Deterministic for a fixed rng
// state; throws capacity_error when the shape is infeasible.
Word random_neighbourless_word(std::mt19937_64& rng, int alphabet, int length);

}  // namespace blockseq
