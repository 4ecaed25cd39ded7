#include "blockseq/enumeration.hpp"

#include <algorithm>

#include "blockseq/errors.hpp"

namespace blockseq {

int delta(int current, int previous) {
  return current == previous ? 1 : std::abs(current - previous);
}

namespace {

void check_beta(const BlockSequence& beta) {
  if (beta.empty()) {
    throw malformed_beta_error("blocksequence must be nonempty");
  }
  for (int b : beta) {
    if (b < 1) {
      throw malformed_beta_error("block counts must be positive");
    }
  }
  if (beta.back() != 1) {
    throw malformed_beta_error("blocksequence must end with 1");
  }
}

}  // namespace

DeltaTable delta_table(const BlockSequence& beta) {
  check_beta(beta);
  DeltaTable table;
  table.beta = beta;
  int previous = 0;
  for (int b : beta) {
    table.deltas.push_back(delta(b, previous));
    previous = b;
  }
  return table;
}

int n_beta(const BlockSequence& beta) {
  const DeltaTable table = delta_table(beta);
  int total = 0;
  for (int d : table.deltas) {
    total += d;
  }
  return total;
}

Word shortest_word(const BlockSequence& beta) {
  check_beta(beta);
  const int l = static_cast<int>(beta.size());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(beta[0]),
                                       std::vector<int>{1});
  for (int i = 2; i <= l; ++i) {
    const int prev = beta[static_cast<std::size_t>(i) - 2];
    const int next = beta[static_cast<std::size_t>(i) - 1];
    if (next == prev) {
      blocks[0].push_back(i);
    } else if (next < prev) {
      const int d = prev - next;
      std::vector<int> joined = blocks[0];
      for (int k = 1; k <= d; ++k) {
        joined.push_back(i);
        joined.insert(joined.end(), blocks[static_cast<std::size_t>(k)].begin(),
                      blocks[static_cast<std::size_t>(k)].end());
      }
      blocks.erase(blocks.begin(), blocks.begin() + d + 1);
      blocks.insert(blocks.begin(), std::move(joined));
    } else {
      for (int k = 0; k < next - prev; ++k) {
        blocks.push_back({i});
      }
    }
  }
  return Word(blocks[0]);
}

namespace {

// Shared block-assembly backtracker. Each stage joins a chosen subset of
// adjacent block pairs with the stage letter, optionally attaches the
// letter at block ends, and interleaves fresh singleton blocks, all under
// the length budget. With the budget at n_beta only the minimal moves fit,
// which yields exactly the shortest words.
class Assembler {
 public:
  Assembler(const BlockSequence& beta, int max_len)
      : beta_(beta), max_len_(max_len) {
    const DeltaTable table = delta_table(beta);
    const int l = static_cast<int>(beta.size());
    future_min_.assign(static_cast<std::size_t>(l) + 2, 0);
    for (int i = l; i >= 1; --i) {
      future_min_[static_cast<std::size_t>(i)] =
          future_min_[static_cast<std::size_t>(i) + 1] +
          table.deltas[static_cast<std::size_t>(i) - 1];
    }
  }

  std::vector<Word> run() {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(beta_[0]),
                                         std::vector<int>{1});
    if (beta_[0] + future_min_[2] <= max_len_) {
      stage(2, blocks, beta_[0]);
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    return std::move(words_);
  }

 private:
  void stage(int i, const std::vector<std::vector<int>>& blocks, int total) {
    if (i > static_cast<int>(beta_.size())) {
      if (blocks.size() == 1) {
        words_.emplace_back(blocks[0]);
      }
      return;
    }
    choose_joins(i, blocks, total, 0, {});
  }

  // Pick which adjacent pairs get joined by the stage letter.
  void choose_joins(int i, const std::vector<std::vector<int>>& blocks,
                    int total, std::size_t gap, std::vector<bool> chosen) {
    const int m = static_cast<int>(blocks.size());
    const int target = beta_[static_cast<std::size_t>(i) - 1];
    if (gap + 1 == static_cast<std::size_t>(m) || m == 1) {
      int joins = static_cast<int>(std::count(chosen.begin(), chosen.end(), true));
      if (m - joins > target || m - joins < 1) {
        return;
      }
      std::vector<std::vector<int>> merged;
      std::vector<int> current = blocks[0];
      for (std::size_t g = 0; g + 1 < blocks.size(); ++g) {
        if (g < chosen.size() && chosen[g]) {
          current.push_back(i);
          current.insert(current.end(), blocks[g + 1].begin(),
                         blocks[g + 1].end());
        } else {
          merged.push_back(std::move(current));
          current = blocks[g + 1];
        }
      }
      merged.push_back(std::move(current));
      choose_attachments(i, merged, total, 0, joins);
      return;
    }
    if (total + future_min_[static_cast<std::size_t>(i) + 1] > max_len_) {
      return;
    }
    chosen.push_back(false);
    choose_joins(i, blocks, total, gap + 1, chosen);
    chosen.back() = true;
    choose_joins(i, blocks, total + 1, gap + 1, chosen);
  }

  // Optionally put the stage letter at either end of each block.
  void choose_attachments(int i, std::vector<std::vector<int>>& blocks,
                          int total, std::size_t at, int placed) {
    if (total + future_min_[static_cast<std::size_t>(i) + 1] > max_len_) {
      return;
    }
    if (at == blocks.size()) {
      choose_new_blocks(i, blocks, total, placed);
      return;
    }
    choose_attachments(i, blocks, total, at + 1, placed);
    std::vector<int>& block = blocks[at];
    for (int mode = 1; mode <= 3; ++mode) {
      const bool left = mode & 1;
      const bool right = mode & 2;
      if (left) {
        block.insert(block.begin(), i);
      }
      if (right) {
        block.push_back(i);
      }
      choose_attachments(i, blocks, total + (left ? 1 : 0) + (right ? 1 : 0),
                         at + 1, placed + (left ? 1 : 0) + (right ? 1 : 0));
      if (left) {
        block.erase(block.begin());
      }
      if (right) {
        block.pop_back();
      }
    }
  }

  // Interleave fresh singleton blocks so the stage ends with the target
  // block count; every letter must occur at least once per stage.
  void choose_new_blocks(int i, const std::vector<std::vector<int>>& blocks,
                         int total, int placed) {
    const int target = beta_[static_cast<std::size_t>(i) - 1];
    const int fresh = target - static_cast<int>(blocks.size());
    if (fresh < 0 || placed + fresh == 0 ||
        total + fresh + future_min_[static_cast<std::size_t>(i) + 1] >
            max_len_) {
      return;
    }
    std::vector<std::vector<int>> arranged;
    interleave(i, blocks, 0, fresh, arranged, total + fresh);
  }

  void interleave(int i, const std::vector<std::vector<int>>& old_blocks,
                  std::size_t taken, int fresh_left,
                  std::vector<std::vector<int>>& arranged, int total) {
    if (taken == old_blocks.size() && fresh_left == 0) {
      stage(i + 1, arranged, total);
      return;
    }
    if (taken < old_blocks.size()) {
      arranged.push_back(old_blocks[taken]);
      interleave(i, old_blocks, taken + 1, fresh_left, arranged, total);
      arranged.pop_back();
    }
    if (fresh_left > 0) {
      arranged.push_back({i});
      interleave(i, old_blocks, taken, fresh_left - 1, arranged, total);
      arranged.pop_back();
    }
  }

  const BlockSequence& beta_;
  int max_len_;
  std::vector<int> future_min_;  // letters still needed from stage i on
  std::vector<Word> words_;
};

}  // namespace

std::vector<Word> enumerate_shortest(const BlockSequence& beta,
                                     int length_cap) {
  const int shortest = n_beta(beta);
  if (shortest > length_cap) {
    throw capacity_error("n_beta exceeds the enumeration cap");
  }
  return Assembler(beta, shortest).run();
}

std::vector<Word> enumerate_condensed(const BlockSequence& beta, int max_len,
                                      int length_cap) {
  check_beta(beta);
  if (max_len < 1) {
    throw malformed_beta_error("max_len must be positive");
  }
  if (max_len > length_cap) {
    throw capacity_error("max_len exceeds the enumeration cap");
  }
  return Assembler(beta, max_len).run();
}

}  // namespace blockseq
