#pragma once

#include <stdexcept>

namespace trirep {

// Base type for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The input graph is not a planar triangulation with the designated outer face.
class NotTriangulation : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed. Signals a bug or inconsistent input data.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// The brute-force search was asked for more vertices than its cap allows.
class CapExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace trirep
