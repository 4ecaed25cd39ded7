#include "blockseq/rewrite.hpp"

#include <algorithm>
#include <numeric>

#include "blockseq/errors.hpp"
#include "blockseq/neighbourless.hpp"

namespace blockseq {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::r1:
      return "R1";
    case Rule::r2:
      return "R2";
    case Rule::r3a:
      return "R3a";
    case Rule::r3b:
      return "R3b";
  }
  return "?";
}

namespace {

void check_stage(const Word& w, int stage) {
  if (!w.uses_contiguous_alphabet()) {
    throw alphabet_mismatch_error(
        "rewriting requires letters 1..l; rename the word first");
  }
  if (stage < 2 || stage > w.max_letter()) {
    throw stage_error("rule stage out of range");
  }
}

std::vector<int> slice(const Word& w, int from, int to) {  // inclusive, 1-based
  std::vector<int> out;
  for (int p = from; p <= to; ++p) {
    out.push_back(w.at(p));
  }
  return out;
}

void append(std::vector<int>& out, const std::vector<int>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

std::vector<StageGap> stage_gaps(const Word& w, int stage) {
  check_stage(w, stage);
  std::vector<int> marked_positions;
  for (int p = 1; p <= w.size(); ++p) {
    if (w.at(p) < stage) {
      marked_positions.push_back(p);
    }
  }
  std::vector<StageGap> gaps;
  for (std::size_t k = 0; k + 1 < marked_positions.size(); ++k) {
    const int left = marked_positions[k];
    const int right = marked_positions[k + 1];
    if (right == left + 1) {
      continue;  // blocks touch, no gap
    }
    StageGap gap;
    gap.left_anchor = left;
    gap.right_anchor = right;
    gap.first = left + 1;
    gap.last = right - 1;
    for (int p = gap.first; p <= gap.last; ++p) {
      if (w.at(p) == stage) {
        ++gap.stage_letter_count;
      }
    }
    gap.is_join = gap.first == gap.last && w.at(gap.first) == stage;
    gap.hosts_separators = gap.stage_letter_count > 0 && !gap.is_join;
    gaps.push_back(gap);
  }
  return gaps;
}

Word apply_r1(const Word& w, int stage, int p1, int p2, int p3) {
  check_stage(w, stage);
  if (!(1 <= p1 && p1 < p2 && p2 < p3 && p3 <= w.size())) {
    throw decomposition_error("r1 anchors must satisfy 1 <= p1 < p2 < p3 <= n");
  }
  if (w.at(p1) >= stage || w.at(p2) >= stage || w.at(p3) >= stage) {
    throw decomposition_error("r1 anchors must be marked at the stage");
  }
  if (p2 == p1 + 1 || p3 == p2 + 1) {
    throw decomposition_error("r1 gaps must be nonempty");
  }
  for (int p = p1 + 1; p < p3; ++p) {
    if (p != p2 && w.at(p) < stage) {
      throw decomposition_error("r1 gaps must be unmarked at the stage");
    }
  }
  std::vector<int> out = slice(w, 1, p1);
  append(out, slice(w, p2 + 1, p3 - 1));  // v
  out.push_back(w.at(p2));
  append(out, slice(w, p1 + 1, p2 - 1));  // u
  append(out, slice(w, p3, w.size()));
  return Word(std::move(out));
}

namespace {

// Separator-host decomposition: leading unmarked segment, then one trailing
// factor per stage letter.
struct Host {
  std::vector<int> lead;
  std::vector<std::vector<int>> tails;
};

Host split_host(const Word& w, int stage, const StageGap& gap) {
  if (!gap.hosts_separators) {
    throw decomposition_error("r2 gap does not host separators");
  }
  Host host;
  std::vector<int> chunk;
  bool seen_letter = false;
  for (int p = gap.first; p <= gap.last; ++p) {
    if (w.at(p) == stage) {
      if (chunk.empty()) {
        throw decomposition_error(
            "r2 separator run must be flanked by larger letters");
      }
      if (!seen_letter) {
        host.lead = chunk;
      } else {
        host.tails.push_back(chunk);
      }
      chunk.clear();
      seen_letter = true;
    } else {
      chunk.push_back(w.at(p));
    }
  }
  if (chunk.empty()) {
    throw decomposition_error(
        "r2 separator run must be flanked by larger letters");
  }
  host.tails.push_back(chunk);
  return host;
}

}  // namespace

Word apply_r2(const Word& w, const RuleApplication& app) {
  check_stage(w, app.stage);
  const std::vector<StageGap> gaps = stage_gaps(w, app.stage);
  if (app.left_gap < 1 || app.right_gap <= app.left_gap ||
      app.right_gap > static_cast<int>(gaps.size())) {
    throw decomposition_error("r2 needs two distinct gaps, left before right");
  }
  const StageGap& left = gaps[static_cast<std::size_t>(app.left_gap) - 1];
  const StageGap& right = gaps[static_cast<std::size_t>(app.right_gap) - 1];
  const Host lhost = split_host(w, app.stage, left);
  const Host rhost = split_host(w, app.stage, right);

  std::vector<std::vector<int>> tails = lhost.tails;
  tails.insert(tails.end(), rhost.tails.begin(), rhost.tails.end());
  const int total = static_cast<int>(tails.size());
  if (app.m1 + app.m2 != total || app.m1 < 0 || app.m2 < 0) {
    throw partition_error("r2 partition must redistribute every trailing factor");
  }
  std::vector<int> order = app.tail_order;
  if (static_cast<int>(order.size()) != total) {
    throw partition_error("r2 tail order must cover every trailing factor");
  }
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  for (int idx : order) {
    if (idx < 0 || idx >= total || seen[static_cast<std::size_t>(idx)]) {
      throw partition_error("r2 tail order must be a permutation");
    }
    seen[static_cast<std::size_t>(idx)] = true;
  }

  auto run = [&](int from, int count) {
    std::vector<int> out;
    for (int k = from; k < from + count; ++k) {
      out.push_back(app.stage);
      append(out, tails[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);
    }
    return out;
  };

  std::vector<int> out = slice(w, 1, left.left_anchor);
  append(out, lhost.lead);
  append(out, run(0, app.m1));
  append(out, slice(w, left.right_anchor, right.left_anchor));  // z2
  append(out, rhost.lead);
  append(out, run(app.m1, app.m2));
  append(out, slice(w, right.right_anchor, w.size()));
  return Word(std::move(out));
}

Word apply_r3(const Word& w, int stage, Rule direction) {
  check_stage(w, stage);
  if (direction != Rule::r3a && direction != Rule::r3b) {
    throw decomposition_error("r3 direction must be r3a or r3b");
  }
  // Core span: everything outside it carries letters >= stage.
  int core_first = 0;
  int core_last = 0;
  for (int p = 1; p <= w.size(); ++p) {
    if (w.at(p) < stage) {
      if (core_first == 0) {
        core_first = p;
      }
      core_last = p;
    }
  }
  if (core_first == 0) {
    throw no_marked_letter_error("no letter is marked before this stage");
  }

  // Left run: from the first stage letter before the core to the core.
  int left_start = core_first;
  for (int p = 1; p < core_first; ++p) {
    if (w.at(p) == stage) {
      left_start = p;
      break;
    }
  }
  // Right run: from the core to the last stage letter after it.
  int right_end = core_last;
  for (int p = w.size(); p > core_last; --p) {
    if (w.at(p) == stage) {
      right_end = p;
      break;
    }
  }
  const bool has_left = left_start < core_first;
  const bool has_right = right_end > core_last;
  if (has_left && w.at(core_first - 1) == stage) {
    throw decomposition_error("satellite unit needs a trailing larger letter");
  }
  if (has_right && w.at(core_last + 1) == stage) {
    throw decomposition_error("satellite unit needs a leading larger letter");
  }

  if ((direction == Rule::r3b && !has_left) ||
      (direction == Rule::r3a && !has_right)) {
    return w;  // nothing to move
  }

  std::vector<int> left_run = has_left ? slice(w, left_start, core_first - 1)
                                       : std::vector<int>{};
  std::vector<int> right_run = has_right ? slice(w, core_last + 1, right_end)
                                         : std::vector<int>{};
  std::vector<int> out = slice(w, 1, left_start - 1);
  if (direction == Rule::r3b) {
    append(out, slice(w, core_first, core_last));
    append(out, right_run);
    std::reverse(left_run.begin(), left_run.end());
    append(out, left_run);
  } else {
    std::reverse(right_run.begin(), right_run.end());
    append(out, right_run);
    append(out, left_run);
    append(out, slice(w, core_first, core_last));
  }
  append(out, slice(w, right_end + 1, w.size()));
  return Word(std::move(out));
}

Word apply(const Word& w, const RuleApplication& app) {
  switch (app.rule) {
    case Rule::r1:
      return apply_r1(w, app.stage, app.anchors[0], app.anchors[1],
                      app.anchors[2]);
    case Rule::r2:
      return apply_r2(w, app);
    case Rule::r3a:
    case Rule::r3b:
      return apply_r3(w, app.stage, app.rule);
  }
  throw error("unknown rule");
}

namespace {

// Rename to letters 1..l and back so callers may normalize words over any
// letter set; positions are unaffected by renaming.
struct CanonicalView {
  Word word;
  std::vector<int> back;  // back[i-1] = original letter with rank i
};

CanonicalView to_canonical_view(const Word& w) {
  const std::vector<int> distinct = w.distinct_letters();
  std::vector<int> renamed;
  renamed.reserve(static_cast<std::size_t>(w.size()));
  for (int x : w.letters()) {
    renamed.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), x) -
        distinct.begin()) + 1);
  }
  return {Word(std::move(renamed)), distinct};
}

Word rename_back(const Word& w, const std::vector<int>& back) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (int x : w.letters()) {
    out.push_back(back[static_cast<std::size_t>(x) - 1]);
  }
  return Word(std::move(out));
}

}  // namespace

NormalizeResult normalize(const Word& input) {
  const CanonicalView view = to_canonical_view(input);
  Word cur = view.word;
  if (!is_neighbourless_for(cur, MarkingSequence::canonical(cur))) {
    throw not_neighbourless_error(
        "normalize requires a word neighbourless w.r.t. the canonical order");
  }
  const int l = cur.max_letter();

  std::vector<RewriteStep> steps;
  auto record = [&steps, &cur](const RuleApplication& app, Word next) {
    steps.push_back({app, next});
    cur = std::move(next);
  };

  for (int stage = 2; stage <= l; ++stage) {
    // Joins into the leftmost gaps.
    for (;;) {
      const std::vector<StageGap> gaps = stage_gaps(cur, stage);
      int at = -1;
      for (std::size_t g = 0; g + 1 < gaps.size(); ++g) {
        if (!gaps[g].is_join && gaps[g + 1].is_join) {
          at = static_cast<int>(g);
          break;
        }
      }
      if (at < 0) {
        break;
      }
      RuleApplication app;
      app.rule = Rule::r1;
      app.stage = stage;
      app.anchors = {gaps[static_cast<std::size_t>(at)].left_anchor,
                     gaps[static_cast<std::size_t>(at)].right_anchor,
                     gaps[static_cast<std::size_t>(at) + 1].right_anchor};
      record(app, apply(cur, app));
    }
    // First separator host next to the joins.
    for (;;) {
      const std::vector<StageGap> gaps = stage_gaps(cur, stage);
      int joins = 0;
      while (joins < static_cast<int>(gaps.size()) &&
             gaps[static_cast<std::size_t>(joins)].is_join) {
        ++joins;
      }
      int host = -1;
      for (int g = joins; g < static_cast<int>(gaps.size()); ++g) {
        if (gaps[static_cast<std::size_t>(g)].hosts_separators) {
          host = g;
          break;
        }
      }
      if (host < 0 || host == joins) {
        break;
      }
      RuleApplication app;
      app.rule = Rule::r1;
      app.stage = stage;
      app.anchors = {gaps[static_cast<std::size_t>(host) - 1].left_anchor,
                     gaps[static_cast<std::size_t>(host) - 1].right_anchor,
                     gaps[static_cast<std::size_t>(host)].right_anchor};
      record(app, apply(cur, app));
    }
    // Consolidate every remaining host into the first one.
    for (;;) {
      const std::vector<StageGap> gaps = stage_gaps(cur, stage);
      std::vector<int> hosts;
      for (int g = 0; g < static_cast<int>(gaps.size()); ++g) {
        if (gaps[static_cast<std::size_t>(g)].hosts_separators) {
          hosts.push_back(g);
        }
      }
      if (hosts.size() < 2) {
        break;
      }
      const int k1 = gaps[static_cast<std::size_t>(hosts[0])].stage_letter_count;
      const int k2 = gaps[static_cast<std::size_t>(hosts[1])].stage_letter_count;
      RuleApplication app;
      app.rule = Rule::r2;
      app.stage = stage;
      app.left_gap = hosts[0] + 1;
      app.right_gap = hosts[1] + 1;
      app.m1 = k1 + k2;
      app.m2 = 0;
      app.tail_order.resize(static_cast<std::size_t>(k1 + k2));
      std::iota(app.tail_order.begin(), app.tail_order.end(), 0);
      record(app, apply(cur, app));
    }
    // Satellites to the right of the core.
    {
      RuleApplication app;
      app.rule = Rule::r3b;
      app.stage = stage;
      Word next = apply(cur, app);
      if (next != cur) {
        record(app, std::move(next));
      }
    }
  }

  Word out = rename_back(cur, view.back);
  for (RewriteStep& step : steps) {
    step.result = rename_back(step.result, view.back);
  }
  return {std::move(out), {std::move(steps)}};
}

}  // namespace blockseq
