#pragma once

#include <stdexcept>
#include <string>

namespace rieffel {

/// Operands live on lattices of different rank, or an index is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A symplectic/metric/complex triple violates its compatibility invariants.
class StructureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A scalar parameter is outside the operation's domain (hbar = 0, bad step, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative estimator hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rieffel
