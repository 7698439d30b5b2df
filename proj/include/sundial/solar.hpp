#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>

#include "sundial/angle.hpp"
#include "sundial/errors.hpp"
#include "sundial/geometry.hpp"

namespace sundial {

/// Observer site: geographic latitude and vertical gnomon height.
template <std::floating_point Scalar = double>
struct ObserverConfig {
  ObserverConfig(Angle<Scalar> latitude_, Scalar gnomon_height_)
      : latitude(latitude_), gnomon_height(gnomon_height_) {
    if (std::abs(latitude.degrees()) > Scalar(90)) {
      throw std::invalid_argument("ObserverConfig: |latitude| must be <= 90 degrees");
    }
    if (!(gnomon_height > Scalar(0)) || !std::isfinite(gnomon_height)) {
      throw std::invalid_argument("ObserverConfig: gnomon height must be positive and finite");
    }
  }

  Angle<Scalar> latitude;
  Scalar gnomon_height;
};

/// Instantaneous sun position: declination and hour angle.
/// The hour angle is normalized to (-180, 180] on construction; 0 is local
/// solar noon and positive values are afternoon (15 degrees per hour).
template <std::floating_point Scalar = double>
struct SolarState {
  SolarState(Angle<Scalar> declination_, Angle<Scalar> hour_angle_)
      : declination(declination_), hour_angle(hour_angle_.normalized()) {
    if (std::abs(declination.degrees()) > Scalar(90)) {
      throw std::invalid_argument("SolarState: |declination| must be <= 90 degrees");
    }
  }

  Angle<Scalar> declination;
  Angle<Scalar> hour_angle;
};

enum class DayKind { Normal, PolarDay, PolarNight };

/// Sunrise/sunset description; the hour fields are present only for Normal.
template <std::floating_point Scalar = double>
struct DayBoundaries {
  DayKind kind = DayKind::Normal;
  std::optional<Scalar> sunrise_hours;
  std::optional<Scalar> sunset_hours;
  std::optional<Angle<Scalar>> half_arc;
};

/// Unit propagation direction of sunlight (from the sun toward the site):
/// the equinox-noon seed (0,1,0) tilted by the declination about x, then
/// turned by the hour angle about z. Equals
/// (cos d sin H, cos d cos H, -sin d); z is negative for northern declination.
template <std::floating_point Scalar>
Vec3<Scalar> sun_direction(const SolarState<Scalar>& state) {
  const Vec3<Scalar> seed(Scalar(0), Scalar(1), Scalar(0));
  return rotation_z(state.hour_angle) * (rotation_x(state.declination) * seed);
}

/// Vertical gnomon expressed in the equatorial frame: (0, -h cos lat, h sin lat).
template <std::floating_point Scalar>
Vec3<Scalar> gnomon_vector(const ObserverConfig<Scalar>& config) {
  const Scalar h = config.gnomon_height;
  return Vec3<Scalar>(Scalar(0), -h * cos(config.latitude), h * sin(config.latitude));
}

/// Sun altitude above the local horizon,
/// a = arcsin(sin lat sin d + cos lat cos d cos H), in [-90, 90] degrees.
template <std::floating_point Scalar>
Angle<Scalar> solar_altitude(Angle<Scalar> latitude, const SolarState<Scalar>& state) {
  const Scalar s = sin(latitude) * sin(state.declination) +
                   cos(latitude) * cos(state.declination) * cos(state.hour_angle);
  const Scalar clamped = std::clamp(s, Scalar(-1), Scalar(1));
  return radians(std::asin(clamped));
}

/// Half day arc and sunrise/sunset from cos H0 = -tan(lat) tan(d).
///
/// |tan lat tan d| > 1 yields PolarDay (sun never sets) or PolarNight.
/// Throws DegenerateDay for the pole at equinox, where the arc is undefined.
template <std::floating_point Scalar>
DayBoundaries<Scalar> day_boundaries(Angle<Scalar> latitude, Angle<Scalar> declination) {
  if (std::abs(cos(latitude)) < Scalar(1e-15) && std::abs(sin(declination)) < Scalar(1e-15)) {
    throw DegenerateDay("day_boundaries: pole at equinox has no defined day arc");
  }
  const Scalar t = -tan(latitude) * tan(declination);
  if (t < Scalar(-1)) {
    return {DayKind::PolarDay, std::nullopt, std::nullopt, std::nullopt};
  }
  if (t > Scalar(1)) {
    return {DayKind::PolarNight, std::nullopt, std::nullopt, std::nullopt};
  }
  const Angle<Scalar> half_arc = radians(std::acos(t));
  const Scalar offset_hours = half_arc.degrees() / Scalar(15);
  return {DayKind::Normal, Scalar(12) - offset_hours, Scalar(12) + offset_hours, half_arc};
}

/// Hour angle of a polar gnomon's shadow line, measured from the meridian:
/// the quadrant-correct form of tan H' = tan H sin lat.
template <std::floating_point Scalar>
Angle<Scalar> polar_gnomon_hour_angle(Angle<Scalar> latitude, Angle<Scalar> hour_angle) {
  return radians(std::atan2(sin(hour_angle) * sin(latitude), cos(hour_angle)));
}

/// Convenience approximation of the solar declination for a day of year
/// (1..366): -23.44 deg * cos(360 deg * (day + 10) / 365.25). Accurate to
/// roughly +-0.3 degrees; meant for human-friendly CLI input, not ephemeris
/// work.
template <std::floating_point Scalar = double>
Angle<Scalar> declination_from_day_of_year(int day) {
  if (day < 1 || day > 366) {
    throw std::out_of_range("declination_from_day_of_year: day must be in 1..366");
  }
  const Scalar turn = Scalar(2) * std::numbers::pi_v<Scalar> *
                      (Scalar(day) + Scalar(10)) / Scalar(365.25);
  return degrees(Scalar(-23.44) * std::cos(turn));
}

}  // namespace sundial
