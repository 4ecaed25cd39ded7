#include "blockseq/textio.hpp"

#include <algorithm>
#include <cctype>

#include "blockseq/errors.hpp"

namespace blockseq {

namespace {

bool all_lower_letters(const std::string& text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::islower(c); });
}

bool int_list_shape(const std::string& text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) {
           return std::isdigit(c) || c == ',';
         });
}

std::vector<int> parse_letters(const std::string& text) {
  if (all_lower_letters(text)) {
    std::vector<int> out;
    out.reserve(text.size());
    for (char c : text) {
      out.push_back(c - 'a' + 1);
    }
    return out;
  }
  if (int_list_shape(text)) {
    return parse_int_list(text);
  }
  throw parse_error("expected lowercase letters or comma-separated integers: '" +
                    text + "'");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  if (!int_list_shape(text)) {
    throw parse_error("expected comma-separated integers: '" + text + "'");
  }
  std::vector<int> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    if (end == begin) {
      throw parse_error("empty entry in integer list: '" + text + "'");
    }
    long value = 0;
    for (std::size_t k = begin; k < end; ++k) {
      value = value * 10 + (text[k] - '0');
      if (value > 1'000'000) {
        throw parse_error("integer too large: '" + text + "'");
      }
    }
    out.push_back(static_cast<int>(value));
    begin = end + 1;
  }
  return out;
}

Word parse_word(const std::string& text) {
  return Word(parse_letters(text));
}

MarkingSequence parse_marking_sequence(const std::string& text) {
  return MarkingSequence(parse_letters(text));
}

std::string render_letters(const std::vector<int>& letters) {
  const bool fits = std::all_of(letters.begin(), letters.end(),
                                [](int x) { return 1 <= x && x <= 26; });
  if (fits) {
    std::string out;
    out.reserve(letters.size());
    for (int x : letters) {
      out.push_back(static_cast<char>('a' + x - 1));
    }
    return out;
  }
  return render_int_list(letters);
}

std::string render_word(const Word& w) { return render_letters(w.letters()); }

std::string render_marking_sequence(const MarkingSequence& sigma) {
  return render_letters(sigma.order());
}

std::string render_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace blockseq
