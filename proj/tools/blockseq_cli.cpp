// Command-line front end: locality, blocksequences, extended
// blocksequences, normal forms, class and shortest-word enumeration, the
// ternary optimizer, and the locality-gap experiment. Words read as
// lowercase letters ('a' = first letter) or comma-separated ids; every
// command exits 0 on success, 2 on input or validation errors, and 3 when a
// capacity cap refuses the request.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockseq/ebs.hpp"
#include "blockseq/enumeration.hpp"
#include "blockseq/errors.hpp"
#include "blockseq/experiment.hpp"
#include "blockseq/locality.hpp"
#include "blockseq/neighbourless.hpp"
#include "blockseq/rewrite.hpp"
#include "blockseq/ternary.hpp"
#include "blockseq/textio.hpp"

namespace {

using blockseq::Ebs;
using blockseq::Word;
using json = nlohmann::ordered_json;

struct Options {
  bool as_json = false;
  bool quiet = false;
};

std::vector<int> parse_list_or_empty(const std::string& text) {
  if (text.empty()) {
    return {};
  }
  return blockseq::parse_int_list(text);
}

void emit(const Options& opt, const json& structured,
          const std::vector<std::string>& lines) {
  if (opt.as_json) {
    std::cout << structured.dump() << "\n";
  } else {
    for (const std::string& line : lines) {
      std::cout << line << "\n";
    }
  }
}

std::string words_key(const std::vector<Word>& words, json& structured,
                      std::vector<std::string>& lines) {
  json arr = json::array();
  for (const Word& w : words) {
    arr.push_back(blockseq::render_word(w));
    lines.push_back(blockseq::render_word(w));
  }
  structured["words"] = std::move(arr);
  return "words";
}

json ebs_json(const Ebs& gamma) {
  return json{{"beta", gamma.beta}, {"iota", gamma.iota}, {"zeta", gamma.zeta}};
}

void run_loc(const Options& opt, const std::string& word_text) {
  const Word w = blockseq::parse_word(word_text);
  const auto result = blockseq::locality(w);
  const std::string witness = blockseq::render_marking_sequence(result.witness);
  emit(opt,
       json{{"word", blockseq::render_word(w)},
            {"loc", result.value},
            {"witness", witness}},
       {"loc " + std::to_string(result.value), "witness " + witness});
}

void run_marking(const Options& opt, const std::string& word_text,
                 const std::string& sequence_text) {
  const Word w = blockseq::parse_word(word_text);
  const auto sigma = blockseq::parse_marking_sequence(sequence_text);
  const auto beta = blockseq::blocksequence(w, sigma);
  const int number = blockseq::marking_number(w, sigma);
  emit(opt,
       json{{"word", blockseq::render_word(w)},
            {"sequence", blockseq::render_marking_sequence(sigma)},
            {"beta", beta},
            {"marking_number", number}},
       {"beta " + blockseq::render_int_list(beta),
        "marking-number " + std::to_string(number)});
}

void run_neighbourless(const Options& opt, const std::string& word_text) {
  const Word w = blockseq::parse_word(word_text);
  const auto sigma = blockseq::neighbourless_sequence(w);
  json structured{{"word", blockseq::render_word(w)}};
  if (sigma) {
    const std::string text = blockseq::render_marking_sequence(*sigma);
    structured["sequence"] = text;
    emit(opt, structured, {text});
  } else {
    structured["sequence"] = nullptr;
    emit(opt, structured, {"none"});
  }
}

void run_ebs(const Options& opt, const std::string& word_text,
             const std::string& sigma_text) {
  const Word w = blockseq::parse_word(word_text);
  const auto sigma = sigma_text.empty()
                         ? blockseq::MarkingSequence::canonical(w)
                         : blockseq::parse_marking_sequence(sigma_text);
  const Ebs gamma = blockseq::ebs_linear(w, sigma);
  json structured{{"word", blockseq::render_word(w)},
                  {"sigma", blockseq::render_marking_sequence(sigma)}};
  structured.update(ebs_json(gamma));
  emit(opt, structured,
       {"beta " + blockseq::render_int_list(gamma.beta),
        "iota " + blockseq::render_int_list(gamma.iota),
        "zeta " + blockseq::render_int_list(gamma.zeta)});
}

Ebs gamma_from_flags(const std::string& beta, const std::string& iota,
                     const std::string& zeta) {
  Ebs gamma;
  gamma.beta = blockseq::parse_int_list(beta);
  gamma.iota = parse_list_or_empty(iota);
  gamma.zeta = parse_list_or_empty(zeta);
  return gamma;
}

void run_validate(const Options& opt, const Ebs& gamma) {
  const auto verdict = blockseq::validate(gamma);
  if (!verdict.ok) {
    throw blockseq::invalid_ebs_error(verdict.diagnostic);
  }
  const auto counts = blockseq::letter_counts(gamma);
  const Word nf = blockseq::normal_form(gamma);
  json structured = ebs_json(gamma);
  structured["valid"] = true;
  structured["length"] = blockseq::ebs_length(gamma);
  structured["letter_counts"] = counts;
  structured["normal_form"] = blockseq::render_word(nf);
  emit(opt, structured,
       {"valid", "length " + std::to_string(blockseq::ebs_length(gamma)),
        "letter-counts " + blockseq::render_int_list(counts),
        "normal-form " + blockseq::render_word(nf)});
}

void run_normal_form(const Options& opt, const std::string& word_text,
                     const Ebs& gamma_flags, bool have_gamma) {
  if (word_text.empty() == !have_gamma) {
    throw blockseq::parse_error("provide either --word or --beta/--iota/--zeta");
  }
  if (!word_text.empty()) {
    const Word w = blockseq::parse_word(word_text);
    const Word nf = blockseq::normalize(w).word;
    json structured{{"word", blockseq::render_word(w)},
                    {"normal_form", blockseq::render_word(nf)}};
    emit(opt, structured, {blockseq::render_word(nf)});
    return;
  }
  const Word nf = blockseq::normal_form(gamma_flags);
  json structured = ebs_json(gamma_flags);
  structured["normal_form"] = blockseq::render_word(nf);
  emit(opt, structured, {blockseq::render_word(nf)});
}

void run_normalize(const Options& opt, const std::string& word_text,
                   bool with_trace) {
  const Word w = blockseq::parse_word(word_text);
  const auto result = blockseq::normalize(w);
  json structured{{"word", blockseq::render_word(w)},
                  {"normal_form", blockseq::render_word(result.word)}};
  std::vector<std::string> lines{blockseq::render_word(result.word)};
  json steps = json::array();
  for (const auto& step : result.trace.steps) {
    const auto& app = step.application;
    json entry{{"rule", std::string(blockseq::rule_name(app.rule))},
               {"stage", app.stage},
               {"result", blockseq::render_word(step.result)}};
    std::ostringstream line;
    line << "step " << blockseq::rule_name(app.rule) << " stage=" << app.stage;
    if (app.rule == blockseq::Rule::r1) {
      entry["anchors"] = app.anchors;
      line << " anchors=" << app.anchors[0] << ',' << app.anchors[1] << ','
           << app.anchors[2];
    } else if (app.rule == blockseq::Rule::r2) {
      entry["gaps"] = {app.left_gap, app.right_gap};
      entry["m1"] = app.m1;
      entry["m2"] = app.m2;
      line << " gaps=" << app.left_gap << ',' << app.right_gap
           << " m1=" << app.m1 << " m2=" << app.m2;
    }
    line << " -> " << blockseq::render_word(step.result);
    steps.push_back(std::move(entry));
    if (with_trace) {
      lines.push_back(line.str());
    }
  }
  if (with_trace) {
    structured["trace"] = std::move(steps);
  }
  emit(opt, structured, lines);
}

void run_members(const Options& opt, const Ebs& gamma) {
  const auto members = blockseq::class_members(gamma);
  json structured = ebs_json(gamma);
  std::vector<std::string> lines;
  words_key(members, structured, lines);
  structured["count"] = members.size();
  emit(opt, structured, lines);
}

void run_enumerate(const Options& opt, const std::string& beta_text,
                   int max_len, bool shortest) {
  const auto beta = blockseq::parse_int_list(beta_text);
  json structured{{"beta", beta}};
  std::vector<Word> words;
  if (shortest) {
    words = blockseq::enumerate_shortest(beta);
    structured["shortest"] = true;
    structured["n_beta"] = blockseq::n_beta(beta);
  } else {
    if (max_len == 0) {
      max_len = blockseq::n_beta(beta);
    }
    words = blockseq::enumerate_condensed(beta, max_len);
    structured["max_len"] = max_len;
  }
  std::vector<std::string> lines;
  words_key(words, structured, lines);
  structured["count"] = words.size();
  emit(opt, structured, lines);
}

void run_ternary(const Options& opt, const std::string& beta_text, int j1,
                 int s1) {
  const auto beta = blockseq::parse_int_list(beta_text);
  if (beta.size() != 3 || beta[2] != 1) {
    throw blockseq::parse_error("--beta must be b1,b2,1");
  }
  const blockseq::TernaryEbs gamma{beta[0], beta[1], j1, s1};
  blockseq::require_valid(gamma.to_ebs());
  const auto opt_result = blockseq::optimal_sequence(gamma);
  const std::string seq =
      blockseq::render_marking_sequence(opt_result.sequence);
  const std::string closed =
      blockseq::render_marking_sequence(opt_result.closed_choice);
  emit(opt,
       json{{"b1", gamma.b1},
            {"b2", gamma.b2},
            {"j1", gamma.j1},
            {"s1", gamma.s1},
            {"sequence", seq},
            {"loc", opt_result.value},
            {"closed_form", closed},
            {"closed_form_value", opt_result.closed_value},
            {"closed_form_optimal", opt_result.closed_attains_optimum}},
       {"sequence " + seq, "loc " + std::to_string(opt_result.value),
        "closed-form " + closed,
        "closed-form-value " + std::to_string(opt_result.closed_value),
        std::string("closed-form-optimal ") +
            (opt_result.closed_attains_optimum ? "true" : "false")});
}

void run_experiment(const Options& opt, int alphabet, const std::string& mode,
                    int max_len, int min_len, int samples,
                    std::uint64_t seed, const std::string& out_path) {
  blockseq::GapReport report;
  if (mode == "exhaustive") {
    report = blockseq::gap_census_exhaustive(alphabet,
                                             max_len == 0 ? 11 : max_len);
  } else if (mode == "sample") {
    report = blockseq::gap_census_sampled(alphabet, samples, seed, min_len,
                                          max_len == 0 ? 21 : max_len);
  } else {
    throw blockseq::parse_error("--mode must be exhaustive or sample");
  }
  if (out_path == "-") {
    blockseq::write_gap_csv(std::cout, report);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw blockseq::error("cannot open output file: " + out_path);
    }
    blockseq::write_gap_csv(out, report);
  }
  json structured{{"alphabet", alphabet},
                  {"mode", mode},
                  {"rows", report.rows.size()},
                  {"max_abs_diff", report.max_abs_diff},
                  {"out", out_path}};
  if (out_path != "-" && !opt.quiet) {
    emit(opt, structured,
         {"rows " + std::to_string(report.rows.size()),
          "max-abs-diff " + std::to_string(report.max_abs_diff)});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locality and blocksequence toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "structured output");
  app.add_flag("--quiet", opt.quiet, "suppress auxiliary output");

  std::string word_text;
  std::string sequence_text;
  std::string sigma_text;
  std::string beta_text;
  std::string iota_text;
  std::string zeta_text;
  std::string mode;
  std::string out_path;
  bool with_trace = false;
  bool shortest = false;
  int max_len = 0;
  int min_len = 13;
  int samples = 10000;
  int alphabet = 0;
  int j1 = 0;
  int s1 = 0;
  std::uint64_t seed = 1;

  auto* loc = app.add_subcommand("loc", "locality number and witness");
  loc->add_option("word", word_text)->required();

  auto* marking =
      app.add_subcommand("marking", "blocksequence and marking number");
  marking->add_option("word", word_text)->required();
  marking->add_option("sequence", sequence_text)->required();

  auto* neighbourless =
      app.add_subcommand("neighbourless", "neighbourless marking sequence");
  neighbourless->add_option("word", word_text)->required();

  auto* ebs = app.add_subcommand("ebs", "extended blocksequence");
  ebs->add_option("word", word_text)->required();
  ebs->add_option("--sigma", sigma_text, "marking sequence (default canonical)");

  auto* validate = app.add_subcommand("validate-ebs", "check an ebs");
  validate->add_option("--beta", beta_text)->required();
  validate->add_option("--iota", iota_text);
  validate->add_option("--zeta", zeta_text);

  auto* normal_form =
      app.add_subcommand("normal-form", "normal form of a word or ebs");
  normal_form->add_option("--word", word_text);
  normal_form->add_option("--beta", beta_text);
  normal_form->add_option("--iota", iota_text);
  normal_form->add_option("--zeta", zeta_text);

  auto* normalize = app.add_subcommand("normalize", "rewrite to normal form");
  normalize->add_option("word", word_text)->required();
  normalize->add_flag("--trace", with_trace, "print every application");

  auto* members = app.add_subcommand("members", "all words sharing an ebs");
  members->add_option("--beta", beta_text)->required();
  members->add_option("--iota", iota_text);
  members->add_option("--zeta", zeta_text);

  auto* enumerate =
      app.add_subcommand("enumerate", "words sharing a blocksequence");
  enumerate->add_option("--beta", beta_text)->required();
  enumerate->add_option("--max-len", max_len, "length bound (default n_beta)");
  enumerate->add_flag("--shortest", shortest, "only length-n_beta words");

  auto* ternary = app.add_subcommand("ternary-optimal",
                                     "optimal sequence for a ternary ebs");
  ternary->add_option("--beta", beta_text)->required();
  ternary->add_option("--j1", j1)->required();
  ternary->add_option("--s1", s1)->required();

  auto* experiment =
      app.add_subcommand("experiment-gap", "locality-gap census");
  experiment->add_option("--alphabet", alphabet)->required();
  experiment->add_option("--mode", mode)->required();
  experiment->add_option("--max-len", max_len);
  experiment->add_option("--min-len", min_len);
  experiment->add_option("--samples", samples);
  experiment->add_option("--seed", seed);
  experiment->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
    if (loc->parsed()) {
      run_loc(opt, word_text);
    } else if (marking->parsed()) {
      run_marking(opt, word_text, sequence_text);
    } else if (neighbourless->parsed()) {
      run_neighbourless(opt, word_text);
    } else if (ebs->parsed()) {
      run_ebs(opt, word_text, sigma_text);
    } else if (validate->parsed()) {
      run_validate(opt, gamma_from_flags(beta_text, iota_text, zeta_text));
    } else if (normal_form->parsed()) {
      const bool have_gamma = !beta_text.empty();
      run_normal_form(opt, word_text,
                      have_gamma
                          ? gamma_from_flags(beta_text, iota_text, zeta_text)
                          : Ebs{{1}, {}, {}},
                      have_gamma);
    } else if (normalize->parsed()) {
      run_normalize(opt, word_text, with_trace);
    } else if (members->parsed()) {
      run_members(opt, gamma_from_flags(beta_text, iota_text, zeta_text));
    } else if (enumerate->parsed()) {
      run_enumerate(opt, beta_text, max_len, shortest);
    } else if (ternary->parsed()) {
      run_ternary(opt, beta_text, j1, s1);
    } else if (experiment->parsed()) {
      run_experiment(opt, alphabet, mode, max_len, min_len, samples, seed,
                     out_path);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const blockseq::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
