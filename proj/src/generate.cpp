#include "blockseq/generate.hpp"

#include <algorithm>

#include "blockseq/errors.hpp"

namespace blockseq {

namespace {

template <typename Admissible>
std::vector<Word> collect(int alphabet, int length, Admissible admissible) {
  std::vector<Word> words;
  std::vector<int> prefix;
  std::vector<int> seen(static_cast<std::size_t>(alphabet) + 1, 0);
  int distinct = 0;

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos > length) {
      if (distinct == alphabet) {
        words.emplace_back(prefix);
      }
      return;
    }
    // Letters still missing must fit into the remaining positions.
    if (alphabet - distinct > length - pos + 1) {
      return;
    }
    for (int letter = 1; letter <= alphabet; ++letter) {
      if (!admissible(prefix, pos, letter)) {
        continue;
      }
      prefix.push_back(letter);
      if (seen[static_cast<std::size_t>(letter)]++ == 0) {
        ++distinct;
      }
      self(self, pos + 1);
      if (--seen[static_cast<std::size_t>(letter)] == 0) {
        --distinct;
      }
      prefix.pop_back();
    }
  };
  dfs(dfs, 1);
  return words;
}

}  // namespace

std::vector<Word> all_condensed_words(int alphabet, int length) {
  if (alphabet < 1 || length < alphabet) {
    return {};
  }
  return collect(alphabet, length,
                 [](const std::vector<int>& prefix, int, int letter) {
                   return prefix.empty() || prefix.back() != letter;
                 });
}

std::vector<Word> all_neighbourless_words(int alphabet, int length) {
  if (alphabet < 1 || length < alphabet || length % 2 == 0) {
    return {};
  }
  return collect(alphabet, length,
                 [](const std::vector<int>& prefix, int pos, int letter) {
                   if (pos == 1) {
                     return true;
                   }
                   const int prev = prefix.back();
                   return pos % 2 == 0 ? letter > prev : letter < prev;
                 });
}

Word random_neighbourless_word(std::mt19937_64& rng, int alphabet,
                               int length) {
  if (alphabet < 1 || length % 2 == 0 || length < 2 * alphabet - 1) {
    throw capacity_error("no neighbourless word of this shape exists");
  }
  if (alphabet == 1) {
    return Word({1});
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    std::vector<bool> seen(static_cast<std::size_t>(alphabet) + 1, false);
    int distinct = 0;
    for (int pos = 1; pos <= length; ++pos) {
      int lo;
      int hi;
      if (pos == 1) {
        lo = 1;
        hi = alphabet - 1;
      } else if (pos % 2 == 0) {
        lo = letters.back() + 1;
        hi = alphabet;
      } else {
        lo = 1;
        hi = pos == length ? letters.back() - 1
                           : std::min(letters.back() - 1, alphabet - 1);
      }
      const int letter =
          std::uniform_int_distribution<int>(lo, hi)(rng);
      letters.push_back(letter);
      if (!seen[static_cast<std::size_t>(letter)]) {
        seen[static_cast<std::size_t>(letter)] = true;
        ++distinct;
      }
    }
    if (distinct == alphabet) {
      return Word(std::move(letters));
    }
  }
  throw capacity_error("failed to sample a word using the whole alphabet");
}

}  // namespace blockseq
