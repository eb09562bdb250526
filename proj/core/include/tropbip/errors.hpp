#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropbip {

// Base of every error raised by the library. The CLI maps StructuralError and
// its subclasses to exit code 2 and BudgetExceeded to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, bad index, unparsable label or rational.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A point lies on the hyperplane x_i = y_j (1-based indices).
class OnHyperplane : public Error {
 public:
  OnHyperplane(int i, int j)
      : Error("point lies on hyperplane x" + std::to_string(i) + " = y" + std::to_string(j)),
        row(i), col(j) {}
  int row;
  int col;
};

class NotAcyclic : public Error {
 public:
  using Error::Error;
};

class NotInOpenImage : public Error {
 public:
  using Error::Error;
};

class NotGeneric : public Error {
 public:
  using Error::Error;
};

class NoRegionFound : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tropbip
