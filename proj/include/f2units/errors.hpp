#pragma once

#include <stdexcept>

namespace f2units {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group data: arity mismatch, out-of-range element, a set that is
// not a subgroup.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Binary operation on elements of two different group algebras.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

// Explicit enumeration requested beyond the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace f2units
