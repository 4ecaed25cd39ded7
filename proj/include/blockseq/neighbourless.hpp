#pragma once

#include <optional>

#include "blockseq/ebs.hpp"
#include "blockseq/word.hpp"

namespace blockseq {

// True iff marking w with sigma never produces a neighbour occurrence.
// Equivalent order test: the word has odd length and every even position
// holds a strict sigma-local maximum.
bool is_neighbourless_for(const Word& w, const MarkingSequence& sigma);

// A marking sequence that is neighbourless for w, when one exists. Built
// from the constraint digraph "each even position's letter is marked after
// both neighbours" by topological sorting; ties are broken towards the
// smallest letter, so the result is deterministic.
std::optional<MarkingSequence> neighbourless_sequence(const Word& w);

// Extended blocksequence of w w.r.t. a neighbourless marking sequence,
// computed in one left-to-right pass over per-letter occurrence lists with
// first/last prefix extrema. Letters are renamed through sigma first, so
// non-canonical sequences and sparse alphabets cost one relabelling pass.
Ebs ebs_linear(const Word& w, const MarkingSequence& sigma);

// Convenience overload using the canonical marking sequence of w.
Ebs ebs_linear(const Word& w);

}  // namespace blockseq
