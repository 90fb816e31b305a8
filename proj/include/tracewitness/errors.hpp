// errors.hpp - exception taxonomy shared by all tracewitness modules
#pragma once

#include <stdexcept>
#include <string>

namespace tracewitness {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input matrix is too far from Hermitian to symmetrize safely.
struct AsymmetryError : Error {
  using Error::Error;
};

/// The iterative eigensolver did not converge; input is pathological.
struct ConvergenceError : Error {
  using Error::Error;
};

/// An eigenvalue lies outside the admissible domain of a spectral map.
struct DomainError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotPDError : Error {
  using Error::Error;
};

struct NotPSDError : Error {
  using Error::Error;
};

struct NotDensityError : Error {
  using Error::Error;
};

/// Condition number exceeds the cap accepted by inverse-based means.
struct ConditionError : Error {
  using Error::Error;
};

/// Functional does not have the shape a witness construction requires.
struct InvalidFunctional : Error {
  using Error::Error;
};

/// Trace of the functional does not match the mode's required target.
struct NormalizationError : Error {
  using Error::Error;
};

struct InvalidConfig : Error {
  using Error::Error;
};

/// Rejection sampler hit its retry budget.
struct SamplerExhausted : Error {
  using Error::Error;
};

/// Slope estimation grid has too few or degenerate points.
struct DegenerateGrid : Error {
  using Error::Error;
};

/// Malformed matrix literal or report JSON.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace tracewitness
