#pragma once

#include <stdexcept>
#include <string>

namespace qrealize {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes or requested sizes are incompatible (odd, nonpositive, mismatched).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A system violates one of the LtiSystem invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (e.g. non-Hermitian input to hermitian_eig).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// PSD low-rank factorization could not be produced at the requested rank.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is real/skew/even in exact arithmetic came out otherwise beyond tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// JSON input could not be turned into a system or realization.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrealize
