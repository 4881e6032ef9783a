#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modetab {

/// Base class of every error raised by the engine, parser and tables.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Malformed token sequence or broken trie invariant.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An unbound variable where a bound value is required.
class InstantiationError : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class ExistenceError : public Error {
 public:
  using Error::Error;
};

/// Bad mode declaration or mode misuse at answer time.
class ModeError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Derivation budget exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace modetab
