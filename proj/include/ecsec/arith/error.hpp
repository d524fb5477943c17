#pragma once

#include <stdexcept>
#include <string>

namespace ecsec {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A coefficient beyond the known precision of a series was requested.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

}  // namespace ecsec
