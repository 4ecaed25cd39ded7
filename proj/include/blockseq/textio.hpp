#pragma once

#include <string>
#include <vector>

#include "blockseq/word.hpp"

namespace blockseq {

// Textual forms: lowercase letters ('a' = 1 .. 'z' = 26) or comma-separated
// positive integers. The two syntaxes round-trip; mixing them is rejected.

Word parse_word(const std::string& text);
MarkingSequence parse_marking_sequence(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

std::string render_word(const Word& w);
std::string render_marking_sequence(const MarkingSequence& sigma);
std::string render_int_list(const std::vector<int>& values);
std::string render_letters(const std::vector<int>& letters);

}  // namespace blockseq
