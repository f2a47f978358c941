#pragma once

#include <stdexcept>
#include <string>

namespace jnt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-range points, degree or field mismatch, malformed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured cap (orbit size, partition size, degree) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A construction could not produce the requested object.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The supplied group does not stabilise the supplied code.
class NotAutomorphismError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace jnt
