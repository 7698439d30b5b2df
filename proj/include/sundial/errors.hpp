#pragma once

#include <stdexcept>

namespace sundial {

/// Base class for domain errors raised by the core geometry.
struct SundialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ray is parallel to the dial plane (determinant below tolerance).
struct SingularSystem : SundialError {
  using SundialError::SundialError;
};

struct SunBelowHorizon : SundialError {
  using SundialError::SundialError;
};

/// Altitude within tolerance of zero: the shadow length diverges.
struct SunOnHorizon : SundialError {
  using SundialError::SundialError;
};

/// Closed-form denominator vanishes; use the parametric path instead.
struct ParabolicDegeneracy : SundialError {
  using SundialError::SundialError;
};

/// Requested x lies outside the real locus of the closed form.
struct NegativeRadicand : SundialError {
  using SundialError::SundialError;
};

/// Sun at or below the polar horizon: no shadow circle exists.
struct NoShadow : SundialError {
  using SundialError::SundialError;
};

/// Pole at equinox: the day arc is undefined.
struct DegenerateDay : SundialError {
  using SundialError::SundialError;
};

}  // namespace sundial
