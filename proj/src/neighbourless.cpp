#include "blockseq/neighbourless.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "blockseq/errors.hpp"

namespace blockseq {

bool is_neighbourless_for(const Word& w, const MarkingSequence& sigma) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  const int n = w.size();
  if (n % 2 == 0) {
    return false;
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    rank[static_cast<std::size_t>(p) - 1] = sigma.stage_of(w.at(p));
  }
  for (int p = 2; p <= n; p += 2) {
    const int r = rank[static_cast<std::size_t>(p) - 1];
    if (r <= rank[static_cast<std::size_t>(p) - 2]) {
      return false;
    }
    if (p < n && r <= rank[static_cast<std::size_t>(p)]) {
      return false;
    }
  }
  return true;
}

std::optional<MarkingSequence> neighbourless_sequence(const Word& w) {
  const int n = w.size();
  const std::vector<int> letters = w.distinct_letters();
  if (n % 2 == 0) {
    return std::nullopt;
  }

  const int l = static_cast<int>(letters.size());
  auto index_of = [&letters](int letter) {
    return static_cast<std::size_t>(
        std::lower_bound(letters.begin(), letters.end(), letter) -
        letters.begin());
  };

  // Edge (a, b): a must be marked before b. Every even position's letter
  // must come after both neighbours; duplicate edges are harmless for the
  // in-degree count.
  std::vector<std::vector<int>> out(static_cast<std::size_t>(l));
  std::vector<int> indegree(static_cast<std::size_t>(l), 0);
  auto add_edge = [&](int before, int after) {
    const auto u = index_of(before);
    const auto v = index_of(after);
    out[u].push_back(static_cast<int>(v));
    ++indegree[v];
  };
  for (int p = 2; p <= n; p += 2) {
    add_edge(w.at(p - 1), w.at(p));
    if (p < n) {
      add_edge(w.at(p + 1), w.at(p));
    }
  }

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < l; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) {
      ready.push(v);
    }
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(l));
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(letters[static_cast<std::size_t>(v)]);
    for (int u : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(u)] == 0) {
        ready.push(u);
      }
    }
  }
  if (static_cast<int>(order.size()) != l) {
    return std::nullopt;  // constraint cycle
  }
  return MarkingSequence(std::move(order));
}

namespace {

// The one-pass classification over Pos/F'/L' for a canonical word whose
// letters are exactly 1..l.
Ebs ebs_linear_canonical(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  int l = 0;
  for (int x : word) {
    l = std::max(l, x);
  }

  std::vector<std::vector<int>> pos(static_cast<std::size_t>(l) + 1);
  std::vector<int> first(static_cast<std::size_t>(l) + 1, n + 1);
  std::vector<int> last(static_cast<std::size_t>(l) + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const int a = word[static_cast<std::size_t>(p) - 1];
    pos[static_cast<std::size_t>(a)].push_back(p);
    first[static_cast<std::size_t>(a)] = std::min(first[static_cast<std::size_t>(a)], p);
    last[static_cast<std::size_t>(a)] = std::max(last[static_cast<std::size_t>(a)], p);
  }

  // prefix_first[i] / prefix_last[i]: extremal positions of letters < i.
  std::vector<int> prefix_first(static_cast<std::size_t>(l) + 2, n + 1);
  std::vector<int> prefix_last(static_cast<std::size_t>(l) + 2, 0);
  for (int i = 2; i <= l; ++i) {
    prefix_first[static_cast<std::size_t>(i)] =
        std::min(prefix_first[static_cast<std::size_t>(i) - 1],
                 first[static_cast<std::size_t>(i) - 1]);
    prefix_last[static_cast<std::size_t>(i)] =
        std::max(prefix_last[static_cast<std::size_t>(i) - 1],
                 last[static_cast<std::size_t>(i) - 1]);
  }

  BlockSequence beta(static_cast<std::size_t>(l));
  std::vector<int> joins(static_cast<std::size_t>(l) + 1, 0);
  std::vector<int> seps(static_cast<std::size_t>(l) + 1, 0);
  std::vector<int> sats(static_cast<std::size_t>(l) + 1, 0);

  beta[0] = static_cast<int>(pos[1].size());
  for (int i = 2; i <= l; ++i) {
    for (int p : pos[static_cast<std::size_t>(i)]) {
      const bool left = p > 1 && word[static_cast<std::size_t>(p) - 2] < i;
      const bool right = p < n && word[static_cast<std::size_t>(p)] < i;
      if (left && right) {
        ++joins[static_cast<std::size_t>(i)];
      } else if (left || right) {
        throw not_neighbourless_error(
            "marking sequence has a neighbour occurrence");
      } else if (prefix_first[static_cast<std::size_t>(i)] < p &&
                 p < prefix_last[static_cast<std::size_t>(i)]) {
        ++seps[static_cast<std::size_t>(i)];
      } else {
        ++sats[static_cast<std::size_t>(i)];
      }
    }
    beta[static_cast<std::size_t>(i) - 1] =
        beta[static_cast<std::size_t>(i) - 2] - joins[static_cast<std::size_t>(i)] +
        seps[static_cast<std::size_t>(i)] + sats[static_cast<std::size_t>(i)];
  }

  Ebs gamma;
  gamma.beta = std::move(beta);
  for (int i = 2; i <= l - 1; ++i) {
    gamma.iota.push_back(joins[static_cast<std::size_t>(i)]);
    gamma.zeta.push_back(seps[static_cast<std::size_t>(i)]);
  }
  return gamma;
}

}  // namespace

Ebs ebs_linear(const Word& w, const MarkingSequence& sigma) {
  if (!sigma.covers(w)) {
    throw alphabet_mismatch_error(
        "marking sequence does not match the word's letters");
  }
  // Rename each letter to its stage; afterwards sigma is the identity.
  const int max_letter = w.max_letter();
  std::vector<int> stage_of(static_cast<std::size_t>(max_letter) + 1, 0);
  for (int k = 1; k <= sigma.stages(); ++k) {
    stage_of[static_cast<std::size_t>(sigma.letter_at(k))] = k;
  }
  std::vector<int> renamed;
  renamed.reserve(static_cast<std::size_t>(w.size()));
  for (int x : w.letters()) {
    renamed.push_back(stage_of[static_cast<std::size_t>(x)]);
  }
  return ebs_linear_canonical(renamed);
}

Ebs ebs_linear(const Word& w) {
  return ebs_linear(w, MarkingSequence::canonical(w));
}

}  // namespace blockseq
