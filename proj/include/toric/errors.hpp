#pragma once

#include <stdexcept>

namespace toric {

// Malformed or semantically invalid input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fan failed validation (simpliciality, spanning, or ridge pairing).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lattice-point region that should be a polytope is unbounded.
class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A user-supplied scan box does not contain the full support of a computation.
class BoxTooSmallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable enumeration cap was exceeded.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toric
