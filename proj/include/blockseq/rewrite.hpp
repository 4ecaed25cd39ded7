#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "blockseq/word.hpp"

namespace blockseq {

// The three class-preserving rewriting rules. R1 swaps the contents of two
// gaps around a shared marked anchor, R2 redistributes the separator runs
// of two gaps, R3 moves a satellite run (reversed) across the core.
enum class Rule { r1, r2, r3a, r3b };

std::string_view rule_name(Rule rule);

struct RuleApplication {
  Rule rule = Rule::r1;
  int stage = 2;

  // r1: positions p1 < p2 < p3 of the three marked anchor letters.
  std::array<int, 3> anchors{0, 0, 0};

  // r2: 1-based indices (into stage_gaps) of the two separator hosts,
  // target counts m1 + m2 = k1 + k2, and the order in which the combined
  // trailing factors are reattached (indices into the combined list; the
  // first m1 go to the left host).
  int left_gap = 0;
  int right_gap = 0;
  int m1 = 0;
  int m2 = 0;
  std::vector<int> tail_order;
};

// One gap between two consecutive marked blocks at a stage (letters below
// the stage letter are marked). In a neighbourless word a gap either is a
// single stage letter (a join), contains stage letters flanked by larger
// ones (a separator host), or contains none at all.
struct StageGap {
  int left_anchor = 0;   // marked position just before the gap
  int right_anchor = 0;  // marked position just after it
  int first = 0;         // inclusive gap span
  int last = 0;
  int stage_letter_count = 0;
  bool is_join = false;
  bool hosts_separators = false;
};

// Gaps of w at `stage` in left-to-right order. Requires letters 1..l.
std::vector<StageGap> stage_gaps(const Word& w, int stage);

// w = x1 a u a' v a'' x2 with marked single-letter anchors at p1 < p2 < p3
// and nonempty unmarked gaps u, v between them; returns x1 a v a' u a'' x2.
Word apply_r1(const Word& w, int stage, int p1, int p2, int p3);

// Redistributes the separator occurrences of two hosting gaps according to
// app.m1/app.m2 and app.tail_order.
Word apply_r2(const Word& w, const RuleApplication& app);

// direction r3b moves the left satellite run of the stage letter, reversed,
// behind the right satellite run; r3a is the mirror image. A missing run
// leaves the word unchanged.
Word apply_r3(const Word& w, int stage, Rule direction);

Word apply(const Word& w, const RuleApplication& app);

struct RewriteStep {
  RuleApplication application;
  Word result;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct NormalizeResult {
  Word word;
  RewriteTrace trace;
};

// Drives a word neighbourless w.r.t. the canonical marking sequence to the
// normal form of its extended blocksequence. Per stage: R1 swaps bubble the
// join gaps to the front, further R1 swaps bring the first separator host
// next to them, R2 consolidates the remaining hosts into it, and R3b moves
// the left satellites across the core. Application sites are chosen
// leftmost-first, so traces are reproducible; only steps that change the
// word are recorded.
NormalizeResult normalize(const Word& w);

}  // namespace blockseq
