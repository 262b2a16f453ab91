#pragma once

#include <stdexcept>
#include <string>

namespace hml {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or sequent text.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// A box index does not exceed the rank of its scope.
class NestingError : public Error {
 public:
  using Error::Error;
};

/// Indexed and plain boxes mixed in one formula, or a formula of the wrong
/// sort handed to an operation.
class SortError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Proof search exceeded its node budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// No decision procedure exists for the requested logic.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A derivation contains a formula outside the set X.
class NotXProof : public Error {
 public:
  using Error::Error;
};

}  // namespace hml
