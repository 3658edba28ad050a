#pragma once

#include <stdexcept>
#include <string>

namespace qb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ambient dimensions of the operands do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A map does not descend to the requested quotients.
class WellDefinednessError : public Error {
 public:
  using Error::Error;
};

/// Structure constants fail the axioms required of the requested object.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class NotSubbimodule : public Error {
 public:
  using Error::Error;
};

class CompatibilityViolation : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of an equivalence does not hold for the given input.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Rows not exact or squares not commuting.
class DiagramInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace qb
