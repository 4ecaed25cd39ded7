#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "blockseq/errors.hpp"

namespace blockseq {

// A condensed word over an ordered alphabet. Letters are positive integer
// ids whose numeric order is the alphabet order; textual I/O maps 'a'..'z'
// to 1..26. Positions are 1-based everywhere in the public API.
class Word {
 public:
  // Requires a nonempty, condensed sequence of ids >= 1.
  explicit Word(std::vector<int> letters);

  // Collapses maximal runs of equal letters to length 1. Idempotent.
  static Word condense(const std::vector<int>& raw);

  int size() const { return static_cast<int>(letters_.size()); }
  int at(int pos) const { return letters_[static_cast<std::size_t>(pos) - 1]; }
  const std::vector<int>& letters() const { return letters_; }

  // Distinct letters in ascending order.
  std::vector<int> distinct_letters() const;
  int max_letter() const;
  int count_of(int letter) const;

  // True when the distinct letters are exactly 1..l. The extended
  // blocksequence and rewriting machinery operates on such words.
  bool uses_contiguous_alphabet() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

// An ordering of a word's distinct letters; order()[k-1] is marked at
// stage k.
class MarkingSequence {
 public:
  explicit MarkingSequence(std::vector<int> order);

  // Ascending order of the word's distinct letters.
  static MarkingSequence canonical(const Word& w);

  int stages() const { return static_cast<int>(order_.size()); }
  int letter_at(int stage) const {
    return order_[static_cast<std::size_t>(stage) - 1];
  }
  // Stage at which `letter` is marked; throws if the letter is absent.
  int stage_of(int letter) const;
  bool contains(int letter) const;
  // True iff the sequence covers exactly letters(w).
  bool covers(const Word& w) const;
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const MarkingSequence&, const MarkingSequence&) =
      default;

 private:
  std::vector<int> order_;
};

// Snapshot of a word after k marking stages.
struct MarkingState {
  int stage = 0;
  std::vector<bool> marked;  // marked[pos-1]
  int blocks = 0;            // maximal runs of marked positions

  bool is_marked(int pos) const {
    return marked[static_cast<std::size_t>(pos) - 1];
  }
};

// Role of one occurrence of the stage letter at its marking stage.
// Separator and satellite refine the singleton case: a separator sits
// strictly between material marked at earlier stages, a satellite outside.
enum class OccurrenceRole { neighbour, join, separator, satellite };

const char* role_name(OccurrenceRole role);

// State after marking stages 1..k of sigma. Stage may be 0 (nothing marked).
MarkingState mark_stage(const Word& w, const MarkingSequence& sigma, int stage);

// One (position, role) entry per occurrence of the stage letter, in
// position order. Stage-1 occurrences are all satellites.
std::vector<std::pair<int, OccurrenceRole>> classify_stage(
    const Word& w, const MarkingSequence& sigma, int stage);

// Positions of the first and last occurrence of any letter marked strictly
// before `stage`; the factor they bound is the core at that stage.
std::pair<int, int> core_factor(const Word& w, const MarkingSequence& sigma,
                                int stage);

}  // namespace blockseq
