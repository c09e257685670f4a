#pragma once

#include <stdexcept>
#include <string>

namespace pcov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, missing keys).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (shape mismatch, bad degree,
/// insufficient precision, size bound exceeded).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request, e.g. inverting zero or a singular curve.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The computation is well posed but provably impossible for this input.
/// Raised when an anomalous elliptic curve blocks globalization.
class RefusalError : public Error {
 public:
  RefusalError(std::string what, int row, int col, int obstruction)
      : Error(std::move(what)), row_(row), col_(col), obstruction_(obstruction) {}

  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }
  int obstruction() const noexcept { return obstruction_; }

 private:
  int row_;
  int col_;
  int obstruction_;
};

/// Two independent computations of the same quantity disagreed.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcov
