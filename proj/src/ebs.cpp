#include "blockseq/ebs.hpp"

#include <algorithm>
#include <string>

#include "blockseq/errors.hpp"
#include "blockseq/neighbourless.hpp"

namespace blockseq {

namespace {

std::string clause(const std::string& what, int i) {
  return what + " (i=" + std::to_string(i) + ")";
}

}  // namespace

EbsValidation validate(const Ebs& gamma) {
  const auto& b = gamma.beta;
  const auto& j = gamma.iota;
  const auto& s = gamma.zeta;
  const int l = gamma.alphabet_size();

  if (l == 0) {
    return {false, "beta is empty"};
  }
  const int middle = std::max(l - 2, 0);
  if (static_cast<int>(j.size()) != middle) {
    return {false, "iota must have length max(l-2, 0)"};
  }
  if (static_cast<int>(s.size()) != middle) {
    return {false, "zeta must have length max(l-2, 0)"};
  }
  for (int i = 0; i < l; ++i) {
    if (b[static_cast<std::size_t>(i)] < 1) {
      return {false, clause("b_i must be positive", i + 1)};
    }
  }
  if (b.back() != 1) {
    return {false, "b_l must be 1"};
  }
  if (l == 1) {
    return {true, {}};
  }
  for (int i = 1; i <= middle; ++i) {
    const int bi = b[static_cast<std::size_t>(i) - 1];
    const int bn = b[static_cast<std::size_t>(i)];
    const int ji = j[static_cast<std::size_t>(i) - 1];
    const int si = s[static_cast<std::size_t>(i) - 1];
    if (si < 0) {
      return {false, clause("s_" + std::to_string(i) + " must be nonnegative", i)};
    }
    if (ji < std::max(bi - bn, 0)) {
      return {false, "j_" + std::to_string(i) + " below lower bound"};
    }
    if (ji > bi - 1) {
      return {false, "j_" + std::to_string(i) + " above upper bound"};
    }
    if (si > 0 && ji > bi - 2) {
      return {false,
              "j_" + std::to_string(i) + " leaves no gap for the separators"};
    }
    if (bi - ji + si > bn) {
      return {false, clause("negative satellite count", i)};
    }
    if (bn - bi + 2 * ji < 1) {
      return {false,
              "letter " + std::to_string(i + 1) + " would not occur"};
    }
  }
  if (b[static_cast<std::size_t>(l) - 2] < 2) {
    return {false, "letter " + std::to_string(l) + " would not occur"};
  }
  return {true, {}};
}

void require_valid(const Ebs& gamma) {
  const EbsValidation v = validate(gamma);
  if (!v.ok) {
    throw invalid_ebs_error("invalid ebs: " + v.diagnostic);
  }
}

std::vector<int> letter_counts(const Ebs& gamma) {
  require_valid(gamma);
  const int l = gamma.alphabet_size();
  std::vector<int> counts(static_cast<std::size_t>(l));
  counts[0] = gamma.beta[0];
  if (l == 1) {
    return counts;
  }
  for (int i = 2; i <= l - 1; ++i) {
    counts[static_cast<std::size_t>(i) - 1] =
        gamma.beta[static_cast<std::size_t>(i) - 1] -
        gamma.beta[static_cast<std::size_t>(i) - 2] +
        2 * gamma.iota[static_cast<std::size_t>(i) - 2];
  }
  counts[static_cast<std::size_t>(l) - 1] =
      gamma.beta[static_cast<std::size_t>(l) - 2] - 1;
  return counts;
}

int ebs_length(const Ebs& gamma) {
  const std::vector<int> counts = letter_counts(gamma);
  int total = 0;
  for (int c : counts) {
    total += c;
  }
  return total;
}

Word normal_form(const Ebs& gamma) {
  require_valid(gamma);
  const int l = gamma.alphabet_size();
  if (l == 1) {
    return Word({1});
  }

  // Placeholder construction; 0 marks slots later letters will fill.
  constexpr int kHole = 0;
  std::vector<int> tokens;
  tokens.reserve(static_cast<std::size_t>(2 * gamma.beta[0]));
  for (int k = 0; k < gamma.beta[0]; ++k) {
    if (k > 0) {
      tokens.push_back(kHole);
    }
    tokens.push_back(1);
  }

  auto nth_hole = [&tokens](int skip) {
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t] == kHole && skip-- == 0) {
        return t;
      }
    }
    return tokens.size();
  };

  for (int i = 1; i <= l - 2; ++i) {
    const int letter = i + 1;
    const int ji = gamma.iota[static_cast<std::size_t>(i) - 1];
    const int si = gamma.zeta[static_cast<std::size_t>(i) - 1];
    for (int k = 0; k < ji; ++k) {
      tokens[nth_hole(0)] = letter;
    }
    if (si > 0) {
      // One gap hosts every separator: the hole splits into an
      // alternation with si letters and si+1 holes.
      std::vector<int> host;
      host.push_back(kHole);
      for (int k = 0; k < si; ++k) {
        host.push_back(letter);
        host.push_back(kHole);
      }
      const std::size_t at = nth_hole(0);
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(at));
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at),
                    host.begin(), host.end());
    }
    const int bi = gamma.beta[static_cast<std::size_t>(i) - 1];
    const int bn = gamma.beta[static_cast<std::size_t>(i)];
    for (int k = 0; k < bn - (bi - ji + si); ++k) {
      tokens.push_back(kHole);
      tokens.push_back(letter);
    }
  }
  for (int& t : tokens) {
    if (t == kHole) {
      t = l;
    }
  }
  return Word(std::move(tokens));
}

std::vector<Word> class_members(const Ebs& gamma, int length_cap) {
  require_valid(gamma);
  const int length = ebs_length(gamma);
  if (length > length_cap) {
    throw capacity_error("class length exceeds the enumeration cap");
  }
  const std::vector<int> counts = letter_counts(gamma);
  const int l = gamma.alphabet_size();

  std::vector<Word> members;
  std::vector<int> remaining = counts;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(length));

  // Candidates must zigzag (every even position a strict local maximum),
  // which any word realizing an ebs does; the final filter is exact.
  auto admissible = [&](int letter, int pos) {
    if (pos == 1) {
      return true;
    }
    const int prev = prefix.back();
    return pos % 2 == 0 ? letter > prev : letter < prev;
  };

  auto emit = [&]() {
    Word candidate(prefix);
    try {
      if (ebs_linear(candidate) == gamma) {
        members.push_back(std::move(candidate));
      }
    } catch (const not_neighbourless_error&) {
    }
  };

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos > length) {
      emit();
      return;
    }
    for (int letter = 1; letter <= l; ++letter) {
      if (remaining[static_cast<std::size_t>(letter) - 1] == 0 ||
          !admissible(letter, pos)) {
        continue;
      }
      --remaining[static_cast<std::size_t>(letter) - 1];
      prefix.push_back(letter);
      self(self, pos + 1);
      prefix.pop_back();
      ++remaining[static_cast<std::size_t>(letter) - 1];
    }
  };
  dfs(dfs, 1);
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace blockseq
