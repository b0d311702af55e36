/** @file errors.hpp
 *  Error types shared by the whole kernel.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

/// Base class of every error the kernel raises on bad input.
/// Internal invariant violations use assert, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A specialization made a denominator vanish (e.g. 1/p at p = 0).
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// Two values built over different parameter lists were combined.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// Substitution image of formal degree > 1 where an affine image is required.
class NonlinearImage : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

/// Basis-change or transport images that are not independent / not a basis.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class DependentImages : public Error {
 public:
  using Error::Error;
};

/// Submodule generators whose span is not closed under the action.
class NotClosed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace lcs
