#ifndef CST_ERRORS_HPP_
#define CST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cst {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (.sgp files, subset literals, sequence files).
struct ParseError : Error {
  ParseError(std::string msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                       : std::move(msg)),
        line_number(line) {}
  int line_number;
};

// Structurally invalid input (non-associative table, bad homomorphism map).
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its contract.
struct PreconditionError : Error {
  using Error::Error;
};

// Index or truncation bound exceeded.
struct BoundsError : Error {
  using Error::Error;
};

// A configured search cap was hit before the search finished.
struct ResourceError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, never user error.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace cst

#endif  // CST_ERRORS_HPP_
