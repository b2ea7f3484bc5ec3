#pragma once

#include <stdexcept>
#include <string>

namespace canord {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic failure such as division by zero or a singular matrix.
class MathError : public Error {
public:
    using Error::Error;
};

/// Division of a cyclotomic number by zero.
class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

/// Malformed input document or invalid parameters (CLI exit code 2).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Configuration outside what the engine supports (CLI exit code 3).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A computed object failed an internal consistency check (CLI exit code 4).
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace canord
