#include "mobgp/error.hpp"

#include <sstream>

namespace mobgp {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::unknown_family: return "unknown family";
    case ErrorCode::out_of_range: return "parameter out of range";
    case ErrorCode::malformed_input: return "malformed input";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::disconnected: return "disconnected graph";
    case ErrorCode::parse_error: return "syntax error";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string format_parse_error(std::size_t offset, const std::vector<std::string> &expected,
                               const std::string &detail) {
  std::ostringstream os;
  os << "syntax error at offset " << offset;
  if (!detail.empty()) os << ": " << detail;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << '"' << expected[i] << '"';
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string &detail)
    : Error(ErrorCode::parse_error, format_parse_error(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace mobgp
