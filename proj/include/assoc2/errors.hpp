#pragma once

#include <stdexcept>
#include <string>

namespace assoc2 {

// Tensor or matrix dimensions do not fit together.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A theorem-level operation was called on data failing its axioms.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file or value; the message carries the location.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace assoc2
