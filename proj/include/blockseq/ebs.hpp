#pragma once

#include <string>
#include <vector>

#include "blockseq/locality.hpp"
#include "blockseq/word.hpp"

namespace blockseq {

// Extended blocksequence (beta, iota, zeta): per-stage block counts plus
// join and separator counts for the middle letters. Stage-1 occurrences
// are all satellites and the last letter's occurrences are all joins, so
// iota and zeta carry entries for stages 2..l-1 only; satellite counts are
// derived, not stored.
struct Ebs {
  BlockSequence beta;
  std::vector<int> iota;
  std::vector<int> zeta;

  int alphabet_size() const { return static_cast<int>(beta.size()); }

  friend bool operator==(const Ebs&, const Ebs&) = default;
};

struct EbsValidation {
  bool ok = false;
  std::string diagnostic;  // first violated clause, empty when ok

  explicit operator bool() const { return ok; }
};

// Decides whether some word that is neighbourless w.r.t. the canonical
// marking sequence realizes gamma. All clauses are arithmetic:
//   - beta ends in 1 and iota/zeta have length max(l-2, 0);
//   - max(b_i - b_{i+1}, 0) <= j_i <= b_i - 1, with j_i <= b_i - 2 whenever
//     s_i > 0 (separators need a gap of their own);
//   - b_i - j_i + s_i <= b_{i+1} (satellite counts are nonnegative);
//   - every letter occurs: b_{i+1} - b_i + 2*j_i >= 1 for middle letters
//     and b_{l-1} >= 2 for the last one.
EbsValidation validate(const Ebs& gamma);

// Throws invalid_ebs_error carrying the diagnostic when gamma is invalid.
void require_valid(const Ebs& gamma);

// Common length of all words realizing gamma.
int ebs_length(const Ebs& gamma);

// Occurrence count per letter 1..l; sums to ebs_length(gamma).
std::vector<int> letter_counts(const Ebs& gamma);

// The canonical representative of gamma's class: joins fill the leftmost
// gaps, all separators sit in the next gap, satellites follow the core.
Word normal_form(const Ebs& gamma);

inline constexpr int kClassLengthCap = 15;

// All words over the canonical alphabet whose extended blocksequence is
// gamma, in lexicographic order. Refuses classes longer than `length_cap`.
std::vector<Word> class_members(const Ebs& gamma,
                                int length_cap = kClassLengthCap);

}  // namespace blockseq
