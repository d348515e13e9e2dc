#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affinekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text, rational literal, cover spec or model document.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Unknown atom or sort, arity or sort mismatch, unbound variable at evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

// An enumeration was requested beyond its documented size limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace affinekit
