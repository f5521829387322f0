#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Errors caused by malformed user input (CLI exit status 2).
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};
struct InvalidDatum : InputError {
  using InputError::InputError;
};
struct AxiomViolation : InputError {
  using InputError::InputError;
};

struct NotASublattice : Error {
  using Error::Error;
};
struct NonTerminating : Error {
  using Error::Error;
};
struct GroupTooLarge : Error {
  using Error::Error;
};
struct NonIntegralWeight : Error {
  using Error::Error;
};
struct NotDominant : Error {
  using Error::Error;
};
struct NotCentral : Error {
  using Error::Error;
};
struct NotScalar : Error {
  using Error::Error;
};
struct IsogenyCheckFailed : Error {
  using Error::Error;
};
struct WeightNotInQuotientLattice : Error {
  using Error::Error;
};
struct CoordinateExpressionFailed : Error {
  using Error::Error;
};

}  // namespace rcg
