#pragma once

#include <stdexcept>
#include <string>

namespace orbitcount {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The configured working precision cannot certify a result.
// The message says how to proceed (usually: raise the guard digits).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (memory, degree, entry count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitcount
