#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobgp {

enum class ErrorCode {
  invalid_argument,
  unknown_family,
  out_of_range,
  malformed_input,
  precondition,
  disconnected,
  parse_error,
  internal,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors in graph expressions. `offset` is a 0-based byte offset
// into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string &detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string> &expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Thrown by long-running searches when their deadline passes.
class TimeLimitExceeded : public std::runtime_error {
 public:
  TimeLimitExceeded() : std::runtime_error("time limit exceeded") {}
};

}  // namespace mobgp
