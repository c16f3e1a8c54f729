#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input value (non-prime modulus, constant-term relation, bad shape, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not fit together (dimension or host mismatch).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The host truncation is too shallow for the requested computation.
class TruncationExhausted : public Error {
 public:
  TruncationExhausted(const std::string& what, int required_order)
      : Error(what), required_order_(required_order) {}
  /// Smallest order known to be sufficient, or 0 when unknown.
  int required_order() const { return required_order_; }

 private:
  int required_order_;
};

/// No Nakayama stabilization before the maximal allowed truncation order.
class NotPrimaryError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation declined because its hypotheses are false or unverifiable.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// A certified identity failed; indicates a bug or a falsified claim.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hl
