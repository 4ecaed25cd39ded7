#include "blockseq/locality.hpp"

#include <algorithm>
#include <limits>

#include "blockseq/errors.hpp"

namespace blockseq {

BlockSequence blocksequence(const Word& w, const MarkingSequence& sigma) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  const int n = w.size();
  const int l = sigma.stages();
  std::vector<int> stage_at(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    stage_at[static_cast<std::size_t>(p) - 1] = sigma.stage_of(w.at(p));
  }
  BlockSequence beta(static_cast<std::size_t>(l));
  for (int k = 1; k <= l; ++k) {
    int blocks = 0;
    bool in_block = false;
    for (int p = 0; p < n; ++p) {
      const bool m = stage_at[static_cast<std::size_t>(p)] <= k;
      if (m && !in_block) {
        ++blocks;
      }
      in_block = m;
    }
    beta[static_cast<std::size_t>(k) - 1] = blocks;
  }
  return beta;
}

int marking_number(const Word& w, const MarkingSequence& sigma) {
  const BlockSequence beta = blocksequence(w, sigma);
  return *std::max_element(beta.begin(), beta.end());
}

namespace {

struct Search {
  const Word& w;
  std::vector<int> letters;               // distinct, ascending
  std::vector<std::vector<int>> posts;    // positions per letter index
  std::vector<bool> marked;               // by position (0-based)
  std::vector<bool> used;                 // by letter index
  std::vector<int> prefix;                // chosen letter indices
  int best_value = std::numeric_limits<int>::max();
  std::vector<int> best_order;

  explicit Search(const Word& word) : w(word), letters(word.distinct_letters()) {
    posts.resize(letters.size());
    for (int p = 1; p <= w.size(); ++p) {
      const auto it =
          std::lower_bound(letters.begin(), letters.end(), w.at(p));
      posts[static_cast<std::size_t>(it - letters.begin())].push_back(p);
    }
    marked.assign(static_cast<std::size_t>(w.size()), false);
    used.assign(letters.size(), false);
  }

  // Block-count change caused by marking one letter. Occurrences of the
  // same letter are never adjacent in a condensed word, so the per-position
  // deltas are independent.
  int mark_delta(std::size_t letter_idx) const {
    int delta = 0;
    for (int p : posts[letter_idx]) {
      const bool left = p > 1 && marked[static_cast<std::size_t>(p) - 2];
      const bool right = p < w.size() && marked[static_cast<std::size_t>(p)];
      if (left && right) {
        --delta;
      } else if (!left && !right) {
        ++delta;
      }
    }
    return delta;
  }

  void set_marks(std::size_t letter_idx, bool value) {
    for (int p : posts[letter_idx]) {
      marked[static_cast<std::size_t>(p) - 1] = value;
    }
  }

  void dfs(int depth, int blocks, int running_max) {
    if (depth == static_cast<int>(letters.size())) {
      // Guarded by the cut below, so this strictly improves the incumbent;
      // ties keep the earlier (lexicographically smaller) witness.
      best_value = running_max;
      best_order = prefix;
      return;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (used[i]) {
        continue;
      }
      const int next_blocks = blocks + mark_delta(i);
      const int next_max = std::max(running_max, next_blocks);
      if (next_max >= best_value) {
        continue;
      }
      used[i] = true;
      set_marks(i, true);
      prefix.push_back(static_cast<int>(i));
      dfs(depth + 1, next_blocks, next_max);
      prefix.pop_back();
      set_marks(i, false);
      used[i] = false;
    }
  }
};

}  // namespace

LocalityResult locality(const Word& w, int alphabet_cap) {
  Search search(w);
  if (static_cast<int>(search.letters.size()) > alphabet_cap) {
    throw capacity_error("alphabet exceeds the exact-search cap");
  }
  search.dfs(0, 0, 0);
  std::vector<int> order;
  order.reserve(search.best_order.size());
  for (int idx : search.best_order) {
    order.push_back(search.letters[static_cast<std::size_t>(idx)]);
  }
  return {search.best_value, MarkingSequence(std::move(order))};
}

bool is_k_local(const Word& w, int k, int alphabet_cap) {
  if (k < 1) {
    throw error("k must be positive");
  }
  return locality(w, alphabet_cap).value <= k;
}

}  // namespace blockseq
