#pragma once

#include <stdexcept>
#include <string>

namespace cdcodes {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BadParams : public Error {
  public:
    using Error::Error;
};

class NotInvertible : public Error {
  public:
    using Error::Error;
};

class NotInGroup : public Error {
  public:
    using Error::Error;
};

class NonIntegralResult : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class BothZero : public Error {
  public:
    using Error::Error;
};

class NormNotPrime : public Error {
  public:
    using Error::Error;
};

class NormNotIntegral : public Error {
  public:
    using Error::Error;
};

class BNotInvertible : public Error {
  public:
    using Error::Error;
};

class NoRepresentative : public Error {
  public:
    using Error::Error;
};

class NotDivisor : public Error {
  public:
    using Error::Error;
};

class NotPrime : public Error {
  public:
    using Error::Error;
};

class LengthMismatch : public Error {
  public:
    using Error::Error;
};

class NormMismatch : public Error {
  public:
    using Error::Error;
};

class UnsupportedQ : public Error {
  public:
    using Error::Error;
};

class InvalidConfig : public Error {
  public:
    using Error::Error;
};

} // namespace cdcodes
