#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>
#include <concepts>

#include "sundial/angle.hpp"
#include "sundial/errors.hpp"

// Frame convention used throughout: +z points to the celestial north pole and
// +y to the sun's equinox-noon azimuth. Dial-plane coordinates after the
// latitude tilt are x = east-west (positive on the afternoon-shadow side) and
// y = meridian (positive toward the pole-ward shadow direction).

namespace sundial {

template <std::floating_point Scalar = double>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

template <std::floating_point Scalar = double>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

/// Rotation about the x axis; maps (0,1,0) to (0, cos t, -sin t).
template <std::floating_point Scalar>
Mat3<Scalar> rotation_x(Angle<Scalar> theta) {
  const Scalar c = cos(theta);
  const Scalar s = sin(theta);
  Mat3<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0),
       Scalar(0), c, s,
       Scalar(0), -s, c;
  return m;
}

/// Rotation about the z axis; maps (0,1,0) to (sin t, cos t, 0).
template <std::floating_point Scalar>
Mat3<Scalar> rotation_z(Angle<Scalar> theta) {
  const Scalar c = cos(theta);
  const Scalar s = sin(theta);
  Mat3<Scalar> m;
  m << c, s, Scalar(0),
       -s, c, Scalar(0),
       Scalar(0), Scalar(0), Scalar(1);
  return m;
}

/// Solution of q*ray_dir + gnomon_tip = (x, y*sin(lat), y*cos(lat)).
template <std::floating_point Scalar = double>
struct ShadowSystemSolution {
  Scalar q;  ///< distance along the ray from the gnomon tip to the plane
  Scalar x;
  Scalar y;
};

/// Intersects the sun ray through the gnomon tip with the tilted dial plane.
///
/// The system is solved as a generic 3x3 linear solve with unknowns
/// (q, x, y); no closed-form shortcut, so it doubles as an independent check
/// of the closed-form locus. Throws SingularSystem when the ray is parallel
/// to the plane (|det| < 1e-12, i.e. the sun sits on the horizon).
template <std::floating_point Scalar>
ShadowSystemSolution<Scalar> solve_shadow_system(const Vec3<Scalar>& ray_dir,
                                                 const Vec3<Scalar>& gnomon_tip,
                                                 Angle<Scalar> latitude) {
  const Scalar sl = sin(latitude);
  const Scalar cl = cos(latitude);
  Mat3<Scalar> system;
  system << ray_dir.x(), Scalar(-1), Scalar(0),
            ray_dir.y(), Scalar(0), -sl,
            ray_dir.z(), Scalar(0), -cl;
  if (std::abs(system.determinant()) < Scalar(1e-12)) {
    throw SingularSystem("solve_shadow_system: ray parallel to the dial plane");
  }
  const Vec3<Scalar> rhs = -gnomon_tip;
  const Vec3<Scalar> solution = system.partialPivLu().solve(rhs);
  return {solution(0), solution(1), solution(2)};
}

}  // namespace sundial
