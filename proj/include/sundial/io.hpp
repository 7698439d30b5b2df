#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sundial/shadow.hpp"

namespace sundial::io {

/// Shortest decimal form that parses back to the same double. Locale-free;
/// never emits "-0".
std::string format_double(double value);

const char* conic_class_name(ConicClass value);
const char* day_kind_name(DayKind value);

/// Columns: hour_angle_deg,x,y,q,altitude_deg. LF line endings, one trailing
/// newline. Polar night produces the header row only.
void write_trajectory_csv(std::ostream& out, const DayTrajectory<double>& trajectory);

/// Object with keys observer, declination_deg, conic, coefficients,
/// boundaries, points. Numbers use format_double, so re-parsing recovers the
/// exact values.
void write_trajectory_json(std::ostream& out, const DayTrajectory<double>& trajectory);

/// Standalone SVG of the sampled polyline, gnomon base at canvas center,
/// +y drawn upward. The first line is a comment recording the parameters.
void write_trajectory_svg(std::ostream& out, const DayTrajectory<double>& trajectory,
                          double size, int samples, double min_altitude_deg);

/// Sundial plate description: polar-gnomon hour lines plus date curves.
struct PlateSpec {
  ObserverConfig<double> observer;
  int hour_begin = 6;
  int hour_end = 18;
  std::vector<double> date_curve_declinations_deg = {-23.44, 0.0, 23.44};
  double size = 800.0;
  double min_altitude_deg = 0.5;
  int samples = 241;
};

/// Hour lines are rays from the dial origin at the polar-gnomon angle H',
/// drawn for hours with daylight at either solstice; date curves are sampled
/// shadow trajectories. Output is byte-deterministic for identical inputs.
void write_plate_svg(std::ostream& out, const PlateSpec& spec);

}  // namespace sundial::io
