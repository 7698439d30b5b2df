#pragma once

#include <cmath>
#include <concepts>
#include <numbers>
#include <stdexcept>

namespace sundial {

/// Plane angle stored in radians. Degrees appear only at API boundaries.
template <std::floating_point Scalar = double>
class Angle {
 public:
  constexpr Angle() = default;

  static Angle from_radians(Scalar value) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("Angle: value must be finite");
    }
    return Angle(value);
  }

  static Angle from_degrees(Scalar value) {
    return from_radians(value * std::numbers::pi_v<Scalar> / Scalar(180));
  }

  Scalar radians() const { return value_; }
  Scalar degrees() const { return value_ * Scalar(180) / std::numbers::pi_v<Scalar>; }

  /// Wrapped into (-pi, pi].
  Angle normalized() const {
    const Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar r = std::fmod(value_ + pi, Scalar(2) * pi);
    if (r <= Scalar(0)) {
      r += Scalar(2) * pi;
    }
    return Angle(r - pi);
  }

  Angle operator-() const { return Angle(-value_); }

  friend bool operator==(Angle lhs, Angle rhs) { return lhs.value_ == rhs.value_; }

 private:
  explicit constexpr Angle(Scalar value) : value_(value) {}

  Scalar value_{0};
};

template <std::floating_point Scalar>
Angle<Scalar> radians(Scalar value) {
  return Angle<Scalar>::from_radians(value);
}

template <std::floating_point Scalar>
Angle<Scalar> degrees(Scalar value) {
  return Angle<Scalar>::from_degrees(value);
}

template <std::floating_point Scalar>
Scalar sin(Angle<Scalar> a) {
  return std::sin(a.radians());
}

template <std::floating_point Scalar>
Scalar cos(Angle<Scalar> a) {
  return std::cos(a.radians());
}

template <std::floating_point Scalar>
Scalar tan(Angle<Scalar> a) {
  return std::tan(a.radians());
}

}  // namespace sundial
