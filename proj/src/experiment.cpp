#include "blockseq/experiment.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "blockseq/ebs.hpp"
#include "blockseq/errors.hpp"
#include "blockseq/generate.hpp"
#include "blockseq/locality.hpp"
#include "blockseq/neighbourless.hpp"
#include "blockseq/textio.hpp"

namespace blockseq {

namespace {

GapRow census_row(const Word& w) {
  const Ebs gamma = ebs_linear(w);
  const Word nf = normal_form(gamma);
  GapRow row{w, 0, 0, 0};
  row.loc = locality(w).value;
  row.loc_normal_form = locality(nf).value;
  int extra = 0;
  for (std::size_t i = 0; i < gamma.iota.size(); ++i) {
    extra += 2 * gamma.iota[i] + gamma.zeta[i];
  }
  row.bound = row.loc_normal_form + extra + gamma.alphabet_size();
  return row;
}

void finish(GapReport& report) {
  std::sort(report.rows.begin(), report.rows.end(),
            [](const GapRow& a, const GapRow& b) {
              if (a.word.size() != b.word.size()) {
                return a.word.size() < b.word.size();
              }
              return a.word < b.word;
            });
  report.max_abs_diff = 0;
  for (const GapRow& row : report.rows) {
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(row.diff()));
  }
}

}  // namespace

GapReport gap_census_exhaustive(int alphabet, int max_len) {
  if (alphabet > 4) {
    throw capacity_error("exhaustive census is limited to alphabets up to 4");
  }
  GapReport report;
  report.alphabet = alphabet;
  report.exhaustive = true;
  report.max_len = max_len;
  for (int n = 1; n <= max_len; n += 2) {
    for (const Word& w : all_neighbourless_words(alphabet, n)) {
      report.rows.push_back(census_row(w));
    }
  }
  finish(report);
  return report;
}

GapReport gap_census_sampled(int alphabet, int samples, std::uint64_t seed,
                             int min_len, int max_len) {
  if (min_len % 2 == 0) {
    ++min_len;
  }
  if (min_len < 2 * alphabet - 1 || max_len < min_len) {
    throw capacity_error("sample length range cannot host the alphabet");
  }
  GapReport report;
  report.alphabet = alphabet;
  report.exhaustive = false;
  report.max_len = max_len;
  report.samples = samples;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const int steps = (max_len - min_len) / 2 + 1;
  for (int k = 0; k < samples; ++k) {
    const int length =
        min_len + 2 * std::uniform_int_distribution<int>(0, steps - 1)(rng);
    report.rows.push_back(
        census_row(random_neighbourless_word(rng, alphabet, length)));
  }
  finish(report);
  return report;
}

void write_gap_csv(std::ostream& out, const GapReport& report) {
  out << "# blockseq-gap v1; columns: word,length,loc,loc_normal_form,diff,bound\n";
  out << "# alphabet=" << report.alphabet
      << " mode=" << (report.exhaustive ? "exhaustive" : "sample");
  if (report.exhaustive) {
    out << " max_len=" << report.max_len;
  } else {
    out << " samples=" << report.samples << " seed=" << report.seed;
  }
  out << "\n";
  out << "word,length,loc,loc_normal_form,diff,bound\n";
  for (const GapRow& row : report.rows) {
    out << render_word(row.word) << ',' << row.word.size() << ',' << row.loc
        << ',' << row.loc_normal_form << ',' << row.diff() << ',' << row.bound
        << "\n";
  }
  out << "summary,," << ",," << report.max_abs_diff << ",\n";
}

}  // namespace blockseq
