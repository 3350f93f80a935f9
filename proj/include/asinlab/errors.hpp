#pragma once

#include <stdexcept>

namespace asinlab {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value; messages name the offending key.
struct ConfigError : Error { using Error::Error; };

/// Mismatched vector/matrix shapes.
struct DimensionError : Error { using Error::Error; };

/// Argument outside its mathematical domain (negative volume, bad label, ...).
struct DomainError : Error { using Error::Error; };

/// Design method applied to data it cannot handle (e.g. discriminant on
/// non-binary truth labels).
struct MethodMismatchError : Error { using Error::Error; };

/// Data that makes the requested quantity undefined (single-class training
/// set, zero-norm input, zero-variance series, zero-noise likelihood).
struct DegenerateDataError : Error { using Error::Error; };

/// Iterative optimisation produced a non-finite loss; message names the epoch.
struct DivergenceError : Error { using Error::Error; };

/// A finite-difference step produced non-finite values; message recommends
/// a larger step.
struct NumericalStepError : Error { using Error::Error; };

/// Too few samples for the requested estimate.
struct InsufficientDataError : Error { using Error::Error; };

/// File read/write failure.
struct IoError : Error { using Error::Error; };

}  // namespace asinlab
