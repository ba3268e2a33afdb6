#pragma once

#include <stdexcept>
#include <string>

namespace bvc {

// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text-format failure; carries the 1-based line it was detected on.
class ParseError : public InputError {
 public:
  enum class Kind { malformed_header, malformed_line, duplicate_edge, id_out_of_range, self_loop, unknown_key, missing_key };

  ParseError(Kind kind, int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A checked mathematical property failed; the message names the counterexample.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is too large for an exhaustive routine.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bvc
