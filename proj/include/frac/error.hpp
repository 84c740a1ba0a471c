#pragma once

#include <stdexcept>
#include <string>

namespace frac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A derivative/integral/shift order that is not on the series' exponent lattice.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// Two series (or a series and a problem) built over different index pairs.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a series with negative exponents at its base point.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Bad hypergeometric parameters, e.g. a vanishing denominator Pochhammer symbol.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Coefficient matching hit an inconsistent equation.
class NoSeriesSolution : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace frac
