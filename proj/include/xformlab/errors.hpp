#pragma once

#include <stdexcept>
#include <string>

namespace xformlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class VarMismatch : public Error {
 public:
  using Error::Error;
};

class NonDifferentiable : public Error {
 public:
  using Error::Error;
};

class NonCausalInput : public Error {
 public:
  using Error::Error;
};

class NotAbsolutelyIntegrable : public Error {
 public:
  using Error::Error;
};

class DivergentTransform : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

class InvalidSignal : public Error {
 public:
  using Error::Error;
};

class ZeroLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class NonzeroInitialConditions : public Error {
 public:
  using Error::Error;
};

class NonPositiveParameter : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_{line},
        column_{column} {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace xformlab
