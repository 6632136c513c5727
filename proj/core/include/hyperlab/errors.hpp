#pragma once

#include <stdexcept>
#include <string>

namespace hyperlab {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range order, malformed spectrum, empty sample set.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Value outside the mathematical domain of an operation (e.g. even root of a
// negative number).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A pole was hit: zero base with negative exponent, axis collision, division
// by a vanishing curvature factor.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// The ambient space lacks data the operation needs (Einstein constant,
// comparison function, non-Einstein product where Einstein is demanded).
class UnsupportedAmbientError : public Error {
 public:
  using Error::Error;
};

// Quadrature or ODE refinement did not reach the requested tolerance.
// Carries the last two refinement values so the caller can judge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double previous, double last)
      : Error(what), previous_value(previous), last_value(last) {}
  double previous_value;
  double last_value;
};

// Mesh ingestion failure (non-manifold edges, malformed records).
class MeshError : public Error {
 public:
  using Error::Error;
};

// Degenerate immersion, off-surface point, or other geometric failure.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Config parsing / validation failure; message carries the field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlab
