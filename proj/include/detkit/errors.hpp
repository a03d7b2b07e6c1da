#pragma once

#include <stdexcept>
#include <string>

namespace detkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
  public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

// Composite or out-of-range modulus passed to a prime-field constructor.
class InvalidModulusError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

class ArityMismatchError : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
  public:
    using Error::Error;
};

class ZeroScaleFactorError : public Error {
  public:
    using Error::Error;
};

class NotSquareError : public Error {
  public:
    using Error::Error;
};

class DependentInputError : public Error {
  public:
    using Error::Error;
};

class NotInSubspaceError : public Error {
  public:
    using Error::Error;
};

class NoNonvanishingTupleError : public Error {
  public:
    using Error::Error;
};

// The two determinant engines disagreed under CrossChecked mode. Both engines
// compute the unique normalized determinant, so this indicates a bug, never a
// mathematical possibility; the rendered values are carried for diagnosis.
class EngineDisagreementError : public Error {
  public:
    EngineDisagreementError(std::string cofactor_value, std::string elimination_value)
        : Error("determinant engines disagree: cofactor = " + cofactor_value +
                ", elimination = " + elimination_value),
          cofactor_value(std::move(cofactor_value)),
          elimination_value(std::move(elimination_value)) {}

    std::string cofactor_value;
    std::string elimination_value;
};

} // namespace detkit
