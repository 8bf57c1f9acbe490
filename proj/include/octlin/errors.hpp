#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octlin {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class NotInvertible : public Error {
  public:
    using Error::Error;
};

class NotUnimodular : public Error {
  public:
    using Error::Error;
};

class ParameterViolation : public Error {
  public:
    using Error::Error;
};

class ZeroCoefficient : public Error {
  public:
    using Error::Error;
};

class SingularMap : public Error {
  public:
    using Error::Error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class NormMismatch : public Error {
  public:
    using Error::Error;
};

class FieldTooLarge : public Error {
  public:
    using Error::Error;
};

// Parse error carrying the 0-based offset of the offending token.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

class UnboundIdentifier : public Error {
  public:
    using Error::Error;
};

class MultipleVariables : public Error {
  public:
    using Error::Error;
};

class NoVariable : public Error {
  public:
    using Error::Error;
};

} // namespace octlin
