#include "blockseq/word.hpp"

#include <algorithm>

namespace blockseq {

namespace {

void check_letters(const std::vector<int>& letters) {
  if (letters.empty()) {
    throw empty_input_error("word must be nonempty");
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1) {
      throw error("letter ids must be positive");
    }
    if (i > 0 && letters[i] == letters[i - 1]) {
      throw error("word is not condensed (adjacent equal letters)");
    }
  }
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

Word Word::condense(const std::vector<int>& raw) {
  if (raw.empty()) {
    throw empty_input_error("cannot condense an empty sequence");
  }
  std::vector<int> out;
  out.reserve(raw.size());
  for (int x : raw) {
    if (out.empty() || out.back() != x) {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

std::vector<int> Word::distinct_letters() const {
  std::vector<int> d = letters_;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

int Word::max_letter() const {
  return *std::max_element(letters_.begin(), letters_.end());
}

int Word::count_of(int letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

bool Word::uses_contiguous_alphabet() const {
  std::vector<int> d = distinct_letters();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

MarkingSequence::MarkingSequence(std::vector<int> order)
    : order_(std::move(order)) {
  if (order_.empty()) {
    throw empty_input_error("marking sequence must be nonempty");
  }
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1 ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw error("marking sequence must list distinct positive letters");
  }
}

MarkingSequence MarkingSequence::canonical(const Word& w) {
  return MarkingSequence(w.distinct_letters());
}

int MarkingSequence::stage_of(int letter) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] == letter) {
      return static_cast<int>(i) + 1;
    }
  }
  throw alphabet_mismatch_error("letter not in marking sequence");
}

bool MarkingSequence::contains(int letter) const {
  return std::find(order_.begin(), order_.end(), letter) != order_.end();
}

bool MarkingSequence::covers(const Word& w) const {
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  return sorted == w.distinct_letters();
}

const char* role_name(OccurrenceRole role) {
  switch (role) {
    case OccurrenceRole::neighbour:
      return "neighbour";
    case OccurrenceRole::join:
      return "join";
    case OccurrenceRole::separator:
      return "separator";
    case OccurrenceRole::satellite:
      return "satellite";
  }
  return "?";
}

namespace {

// marked-before-stage predicate shared by the operations below
std::vector<bool> marks_before(const Word& w, const MarkingSequence& sigma,
                               int stage) {
  std::vector<bool> marked(static_cast<std::size_t>(w.size()), false);
  for (int p = 1; p <= w.size(); ++p) {
    marked[static_cast<std::size_t>(p) - 1] = sigma.stage_of(w.at(p)) < stage;
  }
  return marked;
}

int count_blocks(const std::vector<bool>& marked) {
  int blocks = 0;
  bool in_block = false;
  for (bool m : marked) {
    if (m && !in_block) {
      ++blocks;
    }
    in_block = m;
  }
  return blocks;
}

}  // namespace

MarkingState mark_stage(const Word& w, const MarkingSequence& sigma,
                        int stage) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  if (stage < 0 || stage > sigma.stages()) {
    throw stage_error("stage out of range");
  }
  MarkingState state;
  state.stage = stage;
  state.marked = marks_before(w, sigma, stage + 1);
  state.blocks = count_blocks(state.marked);
  return state;
}

std::vector<std::pair<int, OccurrenceRole>> classify_stage(
    const Word& w, const MarkingSequence& sigma, int stage) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  if (stage < 1 || stage > sigma.stages()) {
    throw stage_error("stage out of range");
  }
  const int letter = sigma.letter_at(stage);
  const std::vector<bool> marked = marks_before(w, sigma, stage);

  // Span of the positions marked at earlier stages; a singleton strictly
  // inside it separates two marked blocks, outside it is a satellite.
  int first_marked = 0;
  int last_marked = 0;
  for (int p = 1; p <= w.size(); ++p) {
    if (marked[static_cast<std::size_t>(p) - 1]) {
      if (first_marked == 0) {
        first_marked = p;
      }
      last_marked = p;
    }
  }

  std::vector<std::pair<int, OccurrenceRole>> roles;
  for (int p = 1; p <= w.size(); ++p) {
    if (w.at(p) != letter) {
      continue;
    }
    const bool left = p > 1 && marked[static_cast<std::size_t>(p) - 2];
    const bool right = p < w.size() && marked[static_cast<std::size_t>(p)];
    OccurrenceRole role;
    if (left && right) {
      role = OccurrenceRole::join;
    } else if (left || right) {
      role = OccurrenceRole::neighbour;
    } else if (first_marked != 0 && first_marked < p && p < last_marked) {
      role = OccurrenceRole::separator;
    } else {
      role = OccurrenceRole::satellite;
    }
    roles.emplace_back(p, role);
  }
  return roles;
}

std::pair<int, int> core_factor(const Word& w, const MarkingSequence& sigma,
                                int stage) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  // A stage beyond the marking process has no core; report it the same way
  // as a stage with nothing marked yet.
  if (stage < 2 || stage > sigma.stages()) {
    throw no_marked_letter_error("no letter is marked before this stage");
  }
  int first = 0;
  int last = 0;
  for (int p = 1; p <= w.size(); ++p) {
    if (sigma.stage_of(w.at(p)) < stage) {
      if (first == 0) {
        first = p;
      }
      last = p;
    }
  }
  if (first == 0) {
    throw no_marked_letter_error("no letter is marked before this stage");
  }
  return {first, last};
}

}  // namespace blockseq
