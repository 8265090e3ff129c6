#pragma once

#include <stdexcept>

namespace irtr {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition on an argument was violated.
struct InvalidArgument : Error {
  using Error::Error;
};

// numerics
struct NoFiniteValue : Error {
  using Error::Error;
};
struct NoBracket : Error {
  using Error::Error;
};
struct InvalidVariance : Error {
  using Error::Error;
};
struct NonFiniteIntegrand : Error {
  using Error::Error;
};

// model
struct DegenerateDevice : Error {
  using Error::Error;
};

// quantum_info
struct OutOfRangeMu : Error {
  using Error::Error;
};
struct DegenerateTensor : Error {
  using Error::Error;
};
struct CrbViolation : Error {
  using Error::Error;
};

// tradeoff
struct InvalidErrorPoint : Error {
  using Error::Error;
};

// protocol
struct DenominatorZero : Error {
  using Error::Error;
};
struct ZeroInformation : Error {
  using Error::Error;
};
struct InsufficientSamples : Error {
  using Error::Error;
};

}  // namespace irtr
