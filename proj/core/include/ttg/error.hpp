#pragma once

#include <stdexcept>
#include <string>

namespace ttg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a descriptor, element or complex violating its invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of ring (e.g. SNF over a quotient).
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// A configured hard bound (factorization size, Hom size, enumeration) was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ttg
