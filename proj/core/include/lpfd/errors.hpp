#pragma once

#include <stdexcept>
#include <string>

namespace lpfd {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown player or predicate, or an arity mismatch against a vocabulary.
struct VocabularyError : Error {
  using Error::Error;
};

// A profile, index or group that does not belong to the model in use.
struct DomainError : Error {
  using Error::Error;
};

// Malformed input data: model files, configs, payoff tables, proof scripts.
struct FormatError : Error {
  using Error::Error;
};

// A configured resource bound was exceeded (cover expansion, group size,
// tautology table width, instance enumeration).
struct ResourceError : Error {
  using Error::Error;
};

// Concrete-syntax error carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lpfd
