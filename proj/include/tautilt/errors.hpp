#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra or module text; `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Well-formed input that violates a mathematical precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured bound (nodes, dimension, enumeration budget) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a statement the engine checks mechanically.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& check, const std::string& witness)
      : Error(check + ": " + witness), check_(check), witness_(witness) {}
  const std::string& check() const noexcept { return check_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string check_;
  std::string witness_;
};

}  // namespace tautilt
