#pragma once

#include <stdexcept>
#include <string>

namespace polycirc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, parameters outside their range,
/// zero vectors where a direction is required.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyPolyhedron : public Error {
 public:
  EmptyPolyhedron() : Error("polyhedron is empty") {}
  using Error::Error;
};

class NotPointed : public Error {
 public:
  NotPointed() : Error("polyhedron has a nontrivial lineality space") {}
  using Error::Error;
};

/// A subset enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An identity that must always hold failed at runtime. Always a bug.
class CorrespondenceViolation : public Error {
 public:
  using Error::Error;
};

class EdgeDirectionGiven : public Error {
 public:
  using Error::Error;
};

class DegenerateVertex : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ProjectionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInjectiveOnQ : public Error {
 public:
  using Error::Error;
};

}  // namespace polycirc
