#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffq {

// Base for every user-facing failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotDiagonal : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class LiftError : public Error {
 public:
  using Error::Error;
};

// An identity the library relies on failed to hold. Indicates a bug in a
// product engine, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cliffq
