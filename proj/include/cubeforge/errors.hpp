#pragma once

#include <stdexcept>
#include <string>

namespace cubeforge {

// Base of every error thrown by the library. The CLI maps the subclasses
// onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A 64-bit addition or multiplication would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the range an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Memory or node budget exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation needing at least one generator was handed a d = 0 cube.
class EmptyCubeError : public Error {
 public:
  using Error::Error;
};

// A cube is not contained in the host set an operation requires.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubeforge
