#include <clocale>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sundial/io.hpp"
#include "sundial/shadow.hpp"

namespace {

using sundial::Angle;
using sundial::DayKind;
using sundial::ObserverConfig;

constexpr int kExitOk = 0;
constexpr int kExitArgumentError = 2;
constexpr int kExitPolarNight = 3;

struct CommonArgs {
  double latitude_deg = 0.0;
  double declination_deg = 0.0;
  int day_of_year = 0;
  double height = 1.0;
  std::string format = "csv";
  int samples = 241;
  double min_altitude_deg = 0.5;
  bool strict = false;
  double parabola_tol = 1e-12;

  CLI::Option* decl_option = nullptr;
  CLI::Option* day_option = nullptr;
  CLI::Option* format_option = nullptr;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_declination) {
  cmd->add_option("--lat", args.latitude_deg, "Observer latitude in degrees")->required();
  if (with_declination) {
    args.decl_option = cmd->add_option("--decl", args.declination_deg,
                                       "Solar declination in degrees");
    args.day_option = cmd->add_option("--day-of-year", args.day_of_year,
                                      "Day of year 1..366 (approximate declination)");
  }
  cmd->add_option("--height", args.height, "Gnomon height (default 1.0)");
  args.format_option =
      cmd->add_option("--format", args.format, "Output format: csv, json or svg")
          ->check(CLI::IsMember({"csv", "json", "svg"}));
  cmd->add_option("--samples", args.samples, "Trajectory sample count (default 241)");
  cmd->add_option("--min-altitude", args.min_altitude_deg,
                  "Minimum solar altitude in degrees for sampled points (default 0.5)");
  cmd->add_flag("--strict", args.strict, "Reject |declination| > 23.44 degrees");
  cmd->add_option("--parabola-tol", args.parabola_tol,
                  "Tolerance on |cos^2(lat) - sin^2(decl)| for the parabolic case");
}

int fail(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitArgumentError;
}

/// Resolves --decl / --day-of-year into a declination, enforcing that exactly
/// one was given. Returns nullopt after printing an error.
std::optional<Angle<double>> resolve_declination(const CommonArgs& args) {
  const bool has_decl = args.decl_option->count() > 0;
  const bool has_day = args.day_option->count() > 0;
  if (has_decl == has_day) {
    fail("exactly one of --decl or --day-of-year is required");
    return std::nullopt;
  }
  double declination_deg = args.declination_deg;
  if (has_day) {
    if (args.day_of_year < 1 || args.day_of_year > 366) {
      fail("--day-of-year must be in 1..366");
      return std::nullopt;
    }
    declination_deg = sundial::declination_from_day_of_year(args.day_of_year).degrees();
  }
  if (std::abs(declination_deg) > 90.0) {
    fail("|declination| must be <= 90 degrees");
    return std::nullopt;
  }
  if (args.strict && std::abs(declination_deg) > 23.44) {
    fail("--strict: |declination| must be <= 23.44 degrees");
    return std::nullopt;
  }
  return sundial::degrees(declination_deg);
}

std::optional<ObserverConfig<double>> resolve_observer(const CommonArgs& args) {
  try {
    return ObserverConfig<double>(sundial::degrees(args.latitude_deg), args.height);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
    return std::nullopt;
  }
}

std::string fixed3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

int run_trajectory(const CommonArgs& args, double size) {
  const auto observer = resolve_observer(args);
  const auto declination = resolve_declination(args);
  if (!observer || !declination) {
    return kExitArgumentError;
  }
  if (args.samples < 2) {
    return fail("--samples must be at least 2");
  }
  if (!(args.min_altitude_deg > 0.0) || args.min_altitude_deg >= 90.0) {
    return fail("--min-altitude must be in (0, 90)");
  }
  if (!(args.parabola_tol > 0.0)) {
    return fail("--parabola-tol must be positive");
  }

  sundial::DayTrajectory<double> trajectory{*observer, *declination, {},
                                            sundial::ConicClass::Line, {}, {}};
  try {
    trajectory = sundial::sample_trajectory(*observer, *declination, args.samples,
                                            sundial::degrees(args.min_altitude_deg));
  } catch (const sundial::SundialError& e) {
    return fail(e.what());
  }
  trajectory.conic =
      sundial::classify_conic(observer->latitude, *declination, args.parabola_tol);

  if (args.format == "csv") {
    sundial::io::write_trajectory_csv(std::cout, trajectory);
  } else if (args.format == "json") {
    sundial::io::write_trajectory_json(std::cout, trajectory);
  } else {
    sundial::io::write_trajectory_svg(std::cout, trajectory, size, args.samples,
                                      args.min_altitude_deg);
  }
  if (trajectory.boundaries.kind == DayKind::PolarNight) {
    std::cerr << "note: polar night, the sun never rises; result is empty\n";
    return kExitPolarNight;
  }
  return kExitOk;
}

int run_classify(const CommonArgs& args) {
  const auto observer = resolve_observer(args);
  const auto declination = resolve_declination(args);
  if (!observer || !declination) {
    return kExitArgumentError;
  }
  if (args.format == "svg") {
    return fail("--format svg is only valid for trajectory and plate");
  }
  if (!(args.parabola_tol > 0.0)) {
    return fail("--parabola-tol must be positive");
  }
  const auto conic =
      sundial::classify_conic(observer->latitude, *declination, args.parabola_tol);
  const auto coefficients = sundial::conic_coefficients(*observer, *declination);
  using sundial::io::format_double;
  if (args.format == "json") {
    std::cout << "{\n  \"conic\": \"" << sundial::io::conic_class_name(conic)
              << "\",\n  \"coefficients\": {"
              << "\"a\": " << format_double(coefficients.a)
              << ", \"b\": " << format_double(coefficients.b)
              << ", \"c\": " << format_double(coefficients.c)
              << ", \"d\": " << format_double(coefficients.d)
              << ", \"e\": " << format_double(coefficients.e)
              << ", \"f\": " << format_double(coefficients.f)
              << ", \"discriminant\": " << format_double(coefficients.discriminant)
              << "}\n}\n";
  } else {
    std::cout << sundial::io::conic_class_name(conic) << '\n'
              << "a " << format_double(coefficients.a) << '\n'
              << "b " << format_double(coefficients.b) << '\n'
              << "c " << format_double(coefficients.c) << '\n'
              << "d " << format_double(coefficients.d) << '\n'
              << "e " << format_double(coefficients.e) << '\n'
              << "f " << format_double(coefficients.f) << '\n'
              << "discriminant " << format_double(coefficients.discriminant) << '\n';
  }
  return kExitOk;
}

int run_sun(const CommonArgs& args, const CLI::Option* hour_angle_option,
            double hour_angle_deg) {
  const auto observer = resolve_observer(args);
  const auto declination = resolve_declination(args);
  if (!observer || !declination) {
    return kExitArgumentError;
  }
  if (args.format == "svg") {
    return fail("--format svg is only valid for trajectory and plate");
  }
  sundial::DayBoundaries<double> boundaries;
  try {
    boundaries = sundial::day_boundaries(observer->latitude, *declination);
  } catch (const sundial::DegenerateDay& e) {
    return fail(e.what());
  }
  switch (boundaries.kind) {
    case DayKind::Normal:
      std::cout << "sunrise " << fixed3(*boundaries.sunrise_hours) << '\n'
                << "sunset " << fixed3(*boundaries.sunset_hours) << '\n';
      break;
    case DayKind::PolarDay:
      std::cout << "POLAR_DAY\n";
      break;
    case DayKind::PolarNight:
      std::cout << "POLAR_NIGHT\n";
      break;
  }
  if (hour_angle_option->count() > 0) {
    const sundial::SolarState<double> state(*declination,
                                            sundial::degrees(hour_angle_deg));
    std::cout << "altitude "
              << fixed3(sundial::solar_altitude(observer->latitude, state).degrees())
              << '\n';
  }
  return kExitOk;
}

int run_plate(const CommonArgs& args, int hour_start, int hour_end,
              std::vector<double> curves_deg, double size) {
  const auto observer = resolve_observer(args);
  if (!observer) {
    return kExitArgumentError;
  }
  if (args.format_option->count() > 0 && args.format != "svg") {
    return fail("plate emits SVG only");
  }
  if (hour_start < 0 || hour_end > 24 || hour_start > hour_end) {
    return fail("hour range must satisfy 0 <= start <= end <= 24");
  }
  if (curves_deg.empty()) {
    return fail("at least one date curve declination is required");
  }
  for (double declination_deg : curves_deg) {
    if (std::abs(declination_deg) > 90.0) {
      return fail("|date curve declination| must be <= 90 degrees");
    }
    if (args.strict && std::abs(declination_deg) > 23.44) {
      return fail("--strict: |date curve declination| must be <= 23.44 degrees");
    }
  }
  if (args.samples < 2) {
    return fail("--samples must be at least 2");
  }
  if (!(args.min_altitude_deg > 0.0) || args.min_altitude_deg >= 90.0) {
    return fail("--min-altitude must be in (0, 90)");
  }
  sundial::io::PlateSpec spec{*observer,  hour_start,
                              hour_end,   std::move(curves_deg),
                              size,       args.min_altitude_deg,
                              args.samples};
  sundial::io::write_plate_svg(std::cout, spec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"Gnomon shadow geometry: trajectories, conic classes, solar events, plates"};
  app.require_subcommand(1);

  CommonArgs trajectory_args;
  double trajectory_size = 800.0;
  CLI::App* trajectory_cmd =
      app.add_subcommand("trajectory", "Sample the daily shadow-tip trajectory");
  add_common_options(trajectory_cmd, trajectory_args, true);
  trajectory_cmd->add_option("--size", trajectory_size, "SVG canvas size (default 800)");

  CommonArgs classify_args;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Classify the shadow path conic");
  add_common_options(classify_cmd, classify_args, true);

  CommonArgs sun_args;
  double hour_angle_deg = 0.0;
  CLI::App* sun_cmd = app.add_subcommand("sun", "Sunrise/sunset times and altitude");
  add_common_options(sun_cmd, sun_args, true);
  CLI::Option* hour_angle_option = sun_cmd->add_option(
      "--hour-angle", hour_angle_deg, "Hour angle in degrees for an altitude query");

  CommonArgs plate_args;
  int hour_start = 6;
  int hour_end = 18;
  std::vector<double> curves_deg = {-23.44, 0.0, 23.44};
  double plate_size = 800.0;
  CLI::App* plate_cmd = app.add_subcommand("plate", "Emit a sundial plate as SVG");
  add_common_options(plate_cmd, plate_args, false);
  plate_cmd->add_option("--hour-start", hour_start, "First hour line (default 6)");
  plate_cmd->add_option("--hour-end", hour_end, "Last hour line (default 18)");
  plate_cmd->add_option("--curves", curves_deg,
                        "Date curve declinations in degrees (default -23.44 0 23.44)");
  plate_cmd->add_option("--size", plate_size, "SVG canvas size (default 800)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitArgumentError;
  }

  try {
    if (app.got_subcommand(trajectory_cmd)) {
      return run_trajectory(trajectory_args, trajectory_size);
    }
    if (app.got_subcommand(classify_cmd)) {
      return run_classify(classify_args);
    }
    if (app.got_subcommand(sun_cmd)) {
      return run_sun(sun_args, hour_angle_option, hour_angle_deg);
    }
    if (app.got_subcommand(plate_cmd)) {
      return run_plate(plate_args, hour_start, hour_end, curves_deg, plate_size);
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return kExitArgumentError;
}
