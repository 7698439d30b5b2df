#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <vector>

#include "sundial/solar.hpp"

namespace sundial {

enum class ConicClass { Hyperbola, Parabola, EllipseOrCircle, Circle, Line };

/// One shadow-tip sample on the dial plane.
template <std::floating_point Scalar = double>
struct ShadowPoint {
  Scalar x;  ///< east-west dial coordinate
  Scalar y;  ///< meridian dial coordinate
  Angle<Scalar> hour_angle;
  Scalar shadow_param;  ///< ray distance from gnomon tip to the plane; equals h / sin(altitude)
};

/// Coefficients of the implicit quadratic A x^2 + B xy + C y^2 + D x + E y + F = 0
/// satisfied by every shadow-tip point. B and D are identically zero: the dial
/// frame is symmetric about the meridian, so squaring the locus produces no xy
/// or x term.
template <std::floating_point Scalar = double>
struct ConicCoefficients {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar d;
  Scalar e;
  Scalar f;
  Scalar discriminant;  ///< b^2 - 4ac

  Scalar residual(Scalar x, Scalar y) const {
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
  }
};

/// A sampled one-day shadow trajectory with its classification.
template <std::floating_point Scalar = double>
struct DayTrajectory {
  ObserverConfig<Scalar> config;
  Angle<Scalar> declination;
  std::vector<ShadowPoint<Scalar>> points;  ///< strictly increasing hour angle
  ConicClass conic;
  ConicCoefficients<Scalar> coefficients;
  DayBoundaries<Scalar> boundaries;
};

/// Shadow tip by ray/plane intersection: the sun ray through the gnomon tip
/// meets the dial plane at (x, y) with ray parameter q > 0.
///
/// Throws SunOnHorizon when |altitude| < 1e-9 degrees (q diverges) and
/// SunBelowHorizon for altitude <= 0.
template <std::floating_point Scalar>
ShadowPoint<Scalar> shadow_tip_parametric(const ObserverConfig<Scalar>& config,
                                          const SolarState<Scalar>& state) {
  const Angle<Scalar> altitude = solar_altitude(config.latitude, state);
  if (std::abs(altitude.degrees()) < Scalar(1e-9)) {
    throw SunOnHorizon("shadow_tip_parametric: sun on the horizon, shadow diverges");
  }
  if (altitude.radians() <= Scalar(0)) {
    throw SunBelowHorizon("shadow_tip_parametric: sun below the horizon");
  }
  const ShadowSystemSolution<Scalar> solution =
      solve_shadow_system(sun_direction(state), gnomon_vector(config), config.latitude);
  return {solution.x, solution.y, state.hour_angle, solution.q};
}

/// Classical closed-form shadow locus, positive square-root branch:
///
///   y = (-h sin(lat) cos(lat) + sin(d) * sqrt((cos^2 lat - sin^2 d) x^2 + h^2 cos^2 d))
///       / (sin^2 d - cos^2 lat)
///
/// Valid wherever the denominator is nonzero and the radicand is nonnegative.
/// On normal (sunrise-to-sunset) days this branch is exactly the physical
/// trajectory; on polar days the trajectory is a closed ellipse whose
/// anti-meridian half lies on the negative branch and is not reachable here.
template <std::floating_point Scalar>
Scalar arab_formula_y(const ObserverConfig<Scalar>& config, Angle<Scalar> declination,
                      Scalar x) {
  const Scalar sl = sin(config.latitude);
  const Scalar cl = cos(config.latitude);
  const Scalar sd = sin(declination);
  const Scalar cd = cos(declination);
  const Scalar h = config.gnomon_height;
  const Scalar denominator = sd * sd - cl * cl;
  if (std::abs(denominator) < Scalar(1e-12)) {
    throw ParabolicDegeneracy("arab_formula_y: parabolic case, denominator vanishes");
  }
  const Scalar radicand = (cl * cl - sd * sd) * x * x + h * h * cd * cd;
  if (radicand < Scalar(0)) {
    throw NegativeRadicand("arab_formula_y: x outside the real locus");
  }
  return (-h * sl * cl + sd * std::sqrt(radicand)) / denominator;
}

/// Implicit-quadratic coefficients of the shadow locus, obtained by isolating
/// the radical of the closed form and squaring:
///
///   A = sin^2 d (sin^2 d - cos^2 lat)       B = 0
///   C = (sin^2 d - cos^2 lat)^2             D = 0
///   E = 2 h sin(lat) cos(lat) (sin^2 d - cos^2 lat)
///   F = h^2 (sin^2 lat cos^2 lat - sin^2 d cos^2 d)
///
/// The squared form covers both square-root branches; see arab_formula_y.
template <std::floating_point Scalar>
ConicCoefficients<Scalar> conic_coefficients(const ObserverConfig<Scalar>& config,
                                             Angle<Scalar> declination) {
  const Scalar sl = sin(config.latitude);
  const Scalar cl = cos(config.latitude);
  const Scalar sd = sin(declination);
  const Scalar cd = cos(declination);
  const Scalar h = config.gnomon_height;
  const Scalar gap = sd * sd - cl * cl;
  ConicCoefficients<Scalar> out;
  out.a = sd * sd * gap;
  out.b = Scalar(0);
  out.c = gap * gap;
  out.d = Scalar(0);
  out.e = Scalar(2) * h * sl * cl * gap;
  out.f = h * h * (sl * sl * cl * cl - sd * sd * cd * cd);
  out.discriminant = out.b * out.b - Scalar(4) * out.a * out.c;
  return out;
}

/// Conic type of the shadow path from the discriminant sign; the sign of
/// B^2 - 4AC equals the sign of cos^2 lat - sin^2 d away from degeneracies.
template <std::floating_point Scalar>
ConicClass classify_conic(Angle<Scalar> latitude, Angle<Scalar> declination,
                          Scalar tol = Scalar(1e-12)) {
  const Scalar sd = std::abs(sin(declination));
  const Scalar cl = std::abs(cos(latitude));
  if (sd < tol) {
    return ConicClass::Line;
  }
  if (cl < tol) {
    return ConicClass::Circle;
  }
  const Scalar gap = cl * cl - sd * sd;
  if (std::abs(gap) < tol) {
    return ConicClass::Parabola;
  }
  return gap > Scalar(0) ? ConicClass::Hyperbola : ConicClass::EllipseOrCircle;
}

/// Radius of the shadow circle at the pole: the sun rides at constant
/// altitude d, so the tip stays at distance h cos(d) / sin(d) from the base.
/// Throws NoShadow for sin(d) <= 0 (polar night or sun on the horizon).
template <std::floating_point Scalar>
Scalar north_pole_radius(const ObserverConfig<Scalar>& config, Angle<Scalar> declination) {
  const Scalar sd = sin(declination);
  if (sd <= Scalar(0)) {
    throw NoShadow("north_pole_radius: sun at or below the polar horizon");
  }
  return config.gnomon_height * cos(declination) / sd;
}

/// Samples the day's shadow trajectory at n hour angles, uniform over the arc
/// where the altitude clears min_altitude. Polar day sweeps the full circle;
/// polar night yields an empty point list. Classification, coefficients and
/// day boundaries are attached in every case.
template <std::floating_point Scalar>
DayTrajectory<Scalar> sample_trajectory(
    const ObserverConfig<Scalar>& config, Angle<Scalar> declination, int n,
    Angle<Scalar> min_altitude = Angle<Scalar>::from_degrees(Scalar(0.5))) {
  if (n < 2) {
    throw std::invalid_argument("sample_trajectory: need at least 2 samples");
  }
  DayTrajectory<Scalar> trajectory{
      config,
      declination,
      {},
      classify_conic(config.latitude, declination),
      conic_coefficients(config, declination),
      day_boundaries(config.latitude, declination)};
  if (trajectory.boundaries.kind == DayKind::PolarNight) {
    return trajectory;
  }

  // altitude >= m  <=>  cos H >= (sin m - sin lat sin d) / (cos lat cos d)
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar numerator = sin(min_altitude) - sin(config.latitude) * sin(declination);
  const Scalar denominator = cos(config.latitude) * cos(declination);
  bool full_circle = false;
  Scalar half_arc = Scalar(0);
  if (denominator < Scalar(1e-300)) {
    // Constant altitude over the day (pole or celestial-pole sun).
    if (numerator > Scalar(0)) {
      return trajectory;
    }
    full_circle = true;
  } else {
    const Scalar cos_bound = numerator / denominator;
    if (cos_bound >= Scalar(1)) {
      return trajectory;
    }
    if (cos_bound <= Scalar(-1)) {
      full_circle = true;
    } else {
      half_arc = std::acos(cos_bound);
    }
  }

  trajectory.points.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Scalar hour_angle_rad =
        full_circle ? -pi + Scalar(2) * pi * Scalar(k + 1) / Scalar(n)
                    : -half_arc + Scalar(2) * half_arc * Scalar(k) / Scalar(n - 1);
    const SolarState<Scalar> state(declination, radians(hour_angle_rad));
    trajectory.points.push_back(shadow_tip_parametric(config, state));
  }
  return trajectory;
}

}  // namespace sundial
