#pragma once

#include <stdexcept>
#include <string>

namespace more {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible tensor/vector dimensions.
struct ShapeError : Error {
  using Error::Error;
};

// Argument outside its documented domain (labels, quotas, multipliers, ...).
struct ValueError : Error {
  using Error::Error;
};

// Backward requested for a value that was not produced on the tape.
struct TapeError : Error {
  using Error::Error;
};

// Operation inconsistent with the object's lifecycle (retraining a task,
// querying statistics that were never computed, ...).
struct StateError : Error {
  using Error::Error;
};

// Non-finite value where a finite one is required.
struct NumericError : Error {
  using Error::Error;
};

// Malformed or truncated file.
struct IoError : Error {
  using Error::Error;
};

// Bad configuration key or value.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace more
