#pragma once

#include <stdexcept>
#include <string>

namespace anyonic {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad modulus, shape mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// Malformed input text or JSON. `where` names the location (JSON pointer or column).
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A quadratic relation that the rewrite engine does not accept.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

}  // namespace anyonic
