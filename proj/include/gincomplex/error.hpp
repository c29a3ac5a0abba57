#pragma once

#include <stdexcept>
#include <string>

namespace gincomplex {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad prime, bad run configuration, mismatched moduli.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Operands living in different rings, wrong variable counts, wrong orders.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// Precondition violations on otherwise well-typed inputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numeric invariants that cannot describe a real surface (negative degree
// of the double curve, negative node count, ...).
class InvalidInvariantsError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gincomplex
