#pragma once

#include <stdexcept>
#include <string>

namespace blockseq {

// Base class for all library errors. The CLI maps capacity_error to a
// distinct exit code; everything else is an input/usage failure.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class empty_input_error : public error {
 public:
  using error::error;
};

class stage_error : public error {
 public:
  using error::error;
};

class no_marked_letter_error : public error {
 public:
  using error::error;
};

class alphabet_mismatch_error : public error {
 public:
  using error::error;
};

class capacity_error : public error {
 public:
  using error::error;
};

class invalid_ebs_error : public error {
 public:
  using error::error;
};

class not_neighbourless_error : public error {
 public:
  using error::error;
};

class decomposition_error : public error {
 public:
  using error::error;
};

class partition_error : public error {
 public:
  using error::error;
};

class malformed_beta_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace blockseq
