#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sundial/geometry.hpp"
#include "sundial/solar.hpp"
#include "support/test_util.hpp"

using namespace sundial;

namespace {

void check_matrix_near(const Mat3d& actual, const Mat3d& expected, double tol) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(std::abs(actual(r, c) - expected(r, c)) <= tol);
    }
  }
}

}  // namespace

TEST_CASE("rotation_x at zero is the identity") {
  check_matrix_near(rotation_x(degrees(0.0)), Mat3d::Identity(), 0.0);
}

TEST_CASE("rotation_x matches its defining product on the equinox seed") {
  // (0,1,0) tilted by the declination must give (0, cos d, -sin d).
  for (double decl_deg : {-23.44, -10.0, 5.0, 23.44, 40.0}) {
    const Vec3d v = rotation_x(degrees(decl_deg)) * Vec3d(0, 1, 0);
    const double d = decl_deg * std::numbers::pi / 180.0;
    CHECK(std::abs(v.x() - 0.0) < 1e-15);
    CHECK(std::abs(v.y() - std::cos(d)) < 1e-15);
    CHECK(std::abs(v.z() + std::sin(d)) < 1e-15);
  }
}

TEST_CASE("rotation_x quarter turn permutes axes per the sign convention") {
  // Row 2 = (0, cos, sin): the quarter turn sends +z to +y and +y to -z.
  const Mat3d m = rotation_x(degrees(90.0));
  const Vec3d from_z = m * Vec3d(0, 0, 1);
  CHECK(std::abs(from_z.x() - 0.0) < 1e-15);
  CHECK(std::abs(from_z.y() - 1.0) < 1e-15);
  CHECK(std::abs(from_z.z() - 0.0) < 1e-15);
  const Vec3d from_y = m * Vec3d(0, 1, 0);
  CHECK(std::abs(from_y.y() - 0.0) < 1e-15);
  CHECK(std::abs(from_y.z() + 1.0) < 1e-15);
}

TEST_CASE("rotation_z at zero is the identity") {
  check_matrix_near(rotation_z(degrees(0.0)), Mat3d::Identity(), 0.0);
}

TEST_CASE("rotation_z turns the tilted seed into the sun direction components") {
  for (double decl_deg : {-23.44, 0.0, 23.44}) {
    for (double hour_deg : {-120.0, -45.0, 0.0, 60.0, 179.0}) {
      const double d = decl_deg * std::numbers::pi / 180.0;
      const double H = hour_deg * std::numbers::pi / 180.0;
      const Vec3d tilted(0, std::cos(d), -std::sin(d));
      const Vec3d v = rotation_z(degrees(hour_deg)) * tilted;
      CHECK(std::abs(v.x() - std::cos(d) * std::sin(H)) < 1e-15);
      CHECK(std::abs(v.y() - std::cos(d) * std::cos(H)) < 1e-15);
      CHECK(std::abs(v.z() + std::sin(d)) < 1e-15);
    }
  }
}

TEST_CASE("rotation_z half and quarter turns") {
  const Vec3d half = rotation_z(degrees(180.0)) * Vec3d(1, 0, 0);
  CHECK(std::abs(half.x() + 1.0) < 1e-15);
  CHECK(std::abs(half.y() - 0.0) < 1e-15);
  const Vec3d quarter = rotation_z(degrees(90.0)) * Vec3d(1, 0, 0);
  CHECK(std::abs(quarter.x() - 0.0) < 1e-15);
  CHECK(std::abs(quarter.y() + 1.0) < 1e-15);
}

TEST_CASE("matrix-vector product is the identity map for I") {
  const Vec3d v = Mat3d::Identity() * Vec3d(3, 4, 5);
  CHECK(v.x() == 3.0);
  CHECK(v.y() == 4.0);
  CHECK(v.z() == 5.0);
}

TEST_CASE("rotations are orthogonal with unit determinant") {
  for (int i = 0; i < 200; ++i) {
    const double theta = test_util::uniform(-720.0, 720.0);
    for (const Mat3d& m : {rotation_x(degrees(theta)), rotation_z(degrees(theta))}) {
      check_matrix_near(m.transpose() * m, Mat3d::Identity(), 1e-12);
      CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rotation inverses and composition") {
  for (int i = 0; i < 200; ++i) {
    const double a = test_util::uniform(-360.0, 360.0);
    const double b = test_util::uniform(-360.0, 360.0);
    check_matrix_near(rotation_x(degrees(a)) * rotation_x(degrees(-a)),
                      Mat3d::Identity(), 1e-12);
    check_matrix_near(rotation_z(degrees(a)) * rotation_z(degrees(b)),
                      rotation_z(degrees(a + b)), 1e-12);
  }
}

TEST_CASE("rotations preserve unit vectors") {
  for (int i = 0; i < 200; ++i) {
    Vec3d v(test_util::uniform(-1, 1), test_util::uniform(-1, 1),
            test_util::uniform(-1, 1));
    if (v.norm() < 1e-6) {
      continue;
    }
    v.normalize();
    const double theta = test_util::uniform(-360.0, 360.0);
    CHECK(std::abs((rotation_x(degrees(theta)) * v).norm() - 1.0) < 1e-12);
    CHECK(std::abs((rotation_z(degrees(theta)) * v).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("solve_shadow_system: sun at zenith over the pole") {
  const auto solution =
      solve_shadow_system<double>(Vec3d(0, 0, -1), Vec3d(0, 0, 1), degrees(90.0));
  CHECK(std::abs(solution.q - 1.0) < 1e-15);
  CHECK(std::abs(solution.x) < 1e-15);
  CHECK(std::abs(solution.y) < 1e-15);
}

TEST_CASE("solve_shadow_system agrees with the altitude identities at noon") {
  // Independent oracle: q = h / sin(altitude) and y = h tan(lat - decl).
  const double lat_deg = 45.0, decl_deg = 23.44, h = 1.0;
  const SolarState<double> state(degrees(decl_deg), degrees(0.0));
  const ObserverConfig<double> cfg(degrees(lat_deg), h);
  const auto solution =
      solve_shadow_system(sun_direction(state), gnomon_vector(cfg), cfg.latitude);
  const double altitude = solar_altitude(cfg.latitude, state).radians();
  CHECK(std::abs(solution.q - h / std::sin(altitude)) < 1e-12);
  CHECK(std::abs(solution.x) < 1e-15);
  const double lat_minus_decl = (lat_deg - decl_deg) * std::numbers::pi / 180.0;
  CHECK(std::abs(solution.y - h * std::tan(lat_minus_decl)) < 1e-12);
  // Frozen from the evaluation above.
  CHECK(std::abs(solution.q - 1.0752303647621608) < 1e-12);
  CHECK(std::abs(solution.y - 0.3951206617054712) < 1e-12);
}

TEST_CASE("solve_shadow_system: polar trajectory radius") {
  // At the pole the ray drops h over q sin(d), so the tip circles at
  // h cos(d)/sin(d) from the base.
  const double decl_deg = 23.44, h = 1.0;
  const ObserverConfig<double> cfg(degrees(90.0), h);
  const double d = decl_deg * std::numbers::pi / 180.0;
  const double radius = h * std::cos(d) / std::sin(d);
  for (double hour_deg = -180.0; hour_deg < 180.0; hour_deg += 7.0) {
    const SolarState<double> state(degrees(decl_deg), degrees(hour_deg));
    const auto solution =
        solve_shadow_system(sun_direction(state), gnomon_vector(cfg), cfg.latitude);
    CHECK(std::abs(std::hypot(solution.x, solution.y) - radius) < 1e-10);
  }
}

TEST_CASE("solve_shadow_system residuals vanish on back-substitution") {
  int tested = 0;
  while (tested < 400) {
    const double lat_deg = test_util::uniform(-89.0, 89.0);
    const double decl_deg = test_util::uniform(-80.0, 80.0);
    const double hour_deg = test_util::uniform(-180.0, 180.0);
    const double h = test_util::uniform(0.1, 10.0);
    const ObserverConfig<double> cfg(degrees(lat_deg), h);
    const SolarState<double> state(degrees(decl_deg), degrees(hour_deg));
    if (solar_altitude(cfg.latitude, state).degrees() <= 0.1) {
      continue;
    }
    ++tested;
    const Vec3d ray = sun_direction(state);
    const Vec3d tip = gnomon_vector(cfg);
    const auto s = solve_shadow_system(ray, tip, cfg.latitude);
    const double sl = std::sin(cfg.latitude.radians());
    const double cl = std::cos(cfg.latitude.radians());
    const Vec3d plane_point(s.x, s.y * sl, s.y * cl);
    const Vec3d residual = s.q * ray + tip - plane_point;
    const double bound = 1e-10 * std::max({1.0, std::abs(s.q), h});
    CHECK(residual.cwiseAbs().maxCoeff() < bound);
  }
}

TEST_CASE("solve_shadow_system rejects rays parallel to the plane") {
  // Sun exactly on the horizon: equator at |H| = 90 with zero declination.
  const SolarState<double> state(degrees(0.0), degrees(90.0));
  const ObserverConfig<double> cfg(degrees(0.0), 1.0);
  CHECK_THROWS_AS(
      solve_shadow_system(sun_direction(state), gnomon_vector(cfg), cfg.latitude),
      SingularSystem);
}
