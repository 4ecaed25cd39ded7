#include "blockseq/ternary.hpp"

#include <algorithm>

#include "blockseq/errors.hpp"
#include "blockseq/locality.hpp"
#include "blockseq/neighbourless.hpp"

namespace blockseq {

Ebs TernaryEbs::to_ebs() const {
  Ebs gamma;
  gamma.beta = {b1, b2, 1};
  gamma.iota = {j1};
  gamma.zeta = {s1};
  return gamma;
}

Word ternary_normal_form(const TernaryEbs& gamma) {
  require_valid(gamma.to_ebs());
  std::vector<int> out;
  auto repeat = [&out](int x, int y, int times) {
    for (int k = 0; k < times; ++k) {
      out.push_back(x);
      out.push_back(y);
    }
  };
  repeat(1, 2, gamma.j1);
  out.push_back(1);
  repeat(3, 2, gamma.s1);
  repeat(3, 1, gamma.b1 - gamma.j1 - 1);
  repeat(3, 2, gamma.b2 - gamma.b1 - gamma.s1 + gamma.j1);
  return Word(std::move(out));
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

std::array<int, 2> closed_counts(const TernaryEbs& g,
                                 const std::array<int, 3>& sequence) {
  const int mixed = 2 * g.j1 + g.b2 - g.b1;
  if (sequence == std::array<int, 3>{1, 2, 3}) {
    return {g.b1, g.b2};
  }
  if (sequence == std::array<int, 3>{1, 3, 2}) {
    return {g.b1, mixed};
  }
  if (sequence == std::array<int, 3>{2, 1, 3}) {
    return {mixed, g.b2};
  }
  if (sequence == std::array<int, 3>{2, 3, 1}) {
    return {mixed, g.b1};
  }
  if (sequence == std::array<int, 3>{3, 1, 2}) {
    return {g.b2 - 1, mixed};
  }
  return {g.b2 - 1, g.b1};
}

}  // namespace

SequenceTable sequence_table(const TernaryEbs& gamma) {
  const Word w = ternary_normal_form(gamma);
  SequenceTable table;
  for (std::size_t r = 0; r < kPermutations.size(); ++r) {
    SequenceTableRow& row = table.rows[r];
    row.sequence = kPermutations[r];
    const BlockSequence beta = blocksequence(
        w, MarkingSequence({row.sequence[0], row.sequence[1], row.sequence[2]}));
    row.simulated = {beta[0], beta[1]};
    row.closed_form = closed_counts(gamma, row.sequence);
    row.agree = {row.simulated[0] == row.closed_form[0],
                 row.simulated[1] == row.closed_form[1]};
  }
  return table;
}

TernaryOptimum optimal_sequence(const TernaryEbs& gamma) {
  const SequenceTable table = sequence_table(gamma);
  auto value_of = [&table](std::size_t r) {
    return std::max({table.rows[r].simulated[0], table.rows[r].simulated[1], 1});
  };
  std::size_t best = 0;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    if (value_of(r) < value_of(best)) {
      best = r;  // rows are in lexicographic order, keep the first minimum
    }
  }

  // Condition groups predicting the winner from (b1, b2, j1) alone; the
  // first matching group wins, (a,b,c) otherwise.
  const int b1 = gamma.b1;
  const int b2 = gamma.b2;
  const int j1 = gamma.j1;
  std::array<int, 3> choice{1, 2, 3};
  if ((2 * b1 >= 2 * j1 + b2 && b2 - 1 >= b1) ||
      (2 * b1 <= 2 * j1 + b2 && b1 >= 2 * j1 + 1)) {
    choice = {2, 3, 1};
  } else if ((b1 <= 2 * j1 + 1 && 2 * b1 >= 2 * j1 + b2) ||
             (b1 >= 2 * j1 + 1 && b1 >= b2 - 1)) {
    choice = {3, 1, 2};
  } else if ((b1 >= b2 - 1 && 2 * b1 <= 2 * j1 + b2) ||
             (2 * b1 >= 2 * j1 + b2 && b1 <= 2 * j1 + 1)) {
    choice = {3, 2, 1};
  }
  const std::size_t choice_row = static_cast<std::size_t>(
      std::find(kPermutations.begin(), kPermutations.end(), choice) -
      kPermutations.begin());

  TernaryOptimum result{
      MarkingSequence({table.rows[best].sequence[0],
                       table.rows[best].sequence[1],
                       table.rows[best].sequence[2]}),
      value_of(best),
      MarkingSequence({choice[0], choice[1], choice[2]}),
      value_of(choice_row),
      false};
  result.closed_attains_optimum = result.closed_value == result.value;
  return result;
}

bool loc_canonical_equal(const Word& w) {
  if (w.distinct_letters().size() != 3) {
    throw alphabet_mismatch_error("expected a word over three letters");
  }
  const Ebs gamma = ebs_linear(w);  // throws when not neighbourless
  const Word nf = normal_form(gamma);
  const int loc_w = marking_number(w, MarkingSequence::canonical(w));
  const int loc_nf = marking_number(nf, MarkingSequence::canonical(nf));
  return loc_w == loc_nf;
}

}  // namespace blockseq
