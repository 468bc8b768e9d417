#pragma once

#include <stdexcept>
#include <string>

namespace hall5 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure constants or exponent vectors with the wrong shape.
struct BadShape : Error {
  using Error::Error;
};

// Text that does not match the polynomial / vector / group-file grammar.
struct ParseError : Error {
  using Error::Error;
};

// evaluate() met an indeterminate with no binding.
struct UnboundIndeterminate : Error {
  using Error::Error;
};

// A polynomial that must be integer-valued evaluated to a proper fraction.
// Firing indicates a transcription bug, never bad input.
struct NonIntegerValue : Error {
  using Error::Error;
};

// An operation that requires a consistent presentation got an inconsistent one.
struct InconsistentPresentation : Error {
  using Error::Error;
};

// The rewriting table handed to the symbolic collector is incomplete.
struct MalformedTable : Error {
  using Error::Error;
};

// A collection run exceeded its step ceiling; a defect, not an input error.
struct CollectionOverflow : Error {
  using Error::Error;
};

}  // namespace hall5
