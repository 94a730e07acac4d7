#pragma once

#include <stdexcept>
#include <string>

namespace homcoord {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input; carries a 1-based line number when known
/// (0 means the failure is not tied to a specific line).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The request exceeds a configured capability, e.g. the covering-graph
/// width cap or an oracle enumeration cap.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace homcoord
