#pragma once

#include <stdexcept>
#include <string>

namespace listcomb {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes (CapacityError -> 3, format/usage problems -> 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class EmptySampleError : public Error {
 public:
  EmptySampleError() : Error("empirical loss of an empty sample is undefined") {}
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedClassError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidCoverError : public Error {
 public:
  using Error::Error;
};

class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

class BoostFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace listcomb
