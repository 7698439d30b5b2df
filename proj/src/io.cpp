#include "sundial/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace sundial::io {

std::string format_double(double value) {
  if (value == 0.0) {
    return "0";
  }
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

const char* conic_class_name(ConicClass value) {
  switch (value) {
    case ConicClass::Hyperbola: return "Hyperbola";
    case ConicClass::Parabola: return "Parabola";
    case ConicClass::EllipseOrCircle: return "EllipseOrCircle";
    case ConicClass::Circle: return "Circle";
    case ConicClass::Line: return "Line";
  }
  return "Unknown";
}

const char* day_kind_name(DayKind value) {
  switch (value) {
    case DayKind::Normal: return "Normal";
    case DayKind::PolarDay: return "PolarDay";
    case DayKind::PolarNight: return "PolarNight";
  }
  return "Unknown";
}

namespace {

double point_altitude_deg(const DayTrajectory<double>& trajectory,
                          const ShadowPoint<double>& point) {
  const SolarState<double> state(trajectory.declination, point.hour_angle);
  return solar_altitude(trajectory.config.latitude, state).degrees();
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const DayTrajectory<double>& trajectory) {
  out << "hour_angle_deg,x,y,q,altitude_deg\n";
  for (const auto& point : trajectory.points) {
    out << format_double(point.hour_angle.degrees()) << ','
        << format_double(point.x) << ','
        << format_double(point.y) << ','
        << format_double(point.shadow_param) << ','
        << format_double(point_altitude_deg(trajectory, point)) << '\n';
  }
}

void write_trajectory_json(std::ostream& out, const DayTrajectory<double>& trajectory) {
  const auto& coeffs = trajectory.coefficients;
  const auto& bounds = trajectory.boundaries;
  out << "{\n";
  out << "  \"observer\": {\"latitude_deg\": "
      << format_double(trajectory.config.latitude.degrees())
      << ", \"gnomon_height\": " << format_double(trajectory.config.gnomon_height)
      << "},\n";
  out << "  \"declination_deg\": " << format_double(trajectory.declination.degrees())
      << ",\n";
  out << "  \"conic\": \"" << conic_class_name(trajectory.conic) << "\",\n";
  out << "  \"coefficients\": {"
      << "\"a\": " << format_double(coeffs.a)
      << ", \"b\": " << format_double(coeffs.b)
      << ", \"c\": " << format_double(coeffs.c)
      << ", \"d\": " << format_double(coeffs.d)
      << ", \"e\": " << format_double(coeffs.e)
      << ", \"f\": " << format_double(coeffs.f)
      << ", \"discriminant\": " << format_double(coeffs.discriminant)
      << "},\n";
  out << "  \"boundaries\": {\"kind\": \"" << day_kind_name(bounds.kind) << '"';
  if (bounds.kind == DayKind::Normal) {
    out << ", \"sunrise_hours\": " << format_double(*bounds.sunrise_hours)
        << ", \"sunset_hours\": " << format_double(*bounds.sunset_hours)
        << ", \"half_arc_deg\": " << format_double(bounds.half_arc->degrees());
  }
  out << "},\n";
  out << "  \"points\": [";
  for (std::size_t i = 0; i < trajectory.points.size(); ++i) {
    const auto& point = trajectory.points[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"hour_angle_deg\": " << format_double(point.hour_angle.degrees())
        << ", \"x\": " << format_double(point.x)
        << ", \"y\": " << format_double(point.y)
        << ", \"q\": " << format_double(point.shadow_param)
        << ", \"altitude_deg\": " << format_double(point_altitude_deg(trajectory, point))
        << '}';
  }
  if (!trajectory.points.empty()) {
    out << "\n  ";
  }
  out << "]\n";
  out << "}\n";
}

namespace {

// Canvas user coordinates put the gnomon base at the origin, +y up; the
// viewBox is centered on it.
struct CanvasMap {
  double scale;

  double px(double wx) const { return scale * wx; }
  double py(double wy) const { return -scale * wy; }
};

void write_svg_header(std::ostream& out, const std::string& comment, double size) {
  const std::string half = format_double(-size / 2);
  out << "<!-- " << comment << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << format_double(size) << "\" height=\"" << format_double(size)
      << "\" viewBox=\"" << half << ' ' << half << ' ' << format_double(size) << ' '
      << format_double(size) << "\">\n";
}

void write_axes(std::ostream& out, double size) {
  const std::string half = format_double(size / 2);
  const std::string neg_half = format_double(-size / 2);
  out << "  <line x1=\"" << neg_half << "\" y1=\"0\" x2=\"" << half
      << "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << neg_half << "\" x2=\"0\" y2=\"" << half
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
}

void write_polyline(std::ostream& out, const CanvasMap& map,
                    const std::vector<std::pair<double, double>>& points,
                    const char* stroke) {
  if (points.empty()) {
    return;
  }
  out << "  <polyline fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) {
      out << ' ';
    }
    out << format_double(map.px(points[i].first)) << ','
        << format_double(map.py(points[i].second));
  }
  out << "\"/>\n";
}

}  // namespace

void write_trajectory_svg(std::ostream& out, const DayTrajectory<double>& trajectory,
                          double size, int samples, double min_altitude_deg) {
  std::string comment = "sundial trajectory; y axis points up (toward the pole);";
  comment += " lat_deg=" + format_double(trajectory.config.latitude.degrees());
  comment += " decl_deg=" + format_double(trajectory.declination.degrees());
  comment += " height=" + format_double(trajectory.config.gnomon_height);
  comment += " samples=" + std::to_string(samples);
  comment += " min_altitude_deg=" + format_double(min_altitude_deg);
  comment += " size=" + format_double(size);
  comment += " conic=";
  comment += conic_class_name(trajectory.conic);

  double extent = trajectory.config.gnomon_height;
  for (const auto& point : trajectory.points) {
    extent = std::max({extent, std::abs(point.x), std::abs(point.y)});
  }
  const CanvasMap map{size * 0.46 / extent};

  write_svg_header(out, comment, size);
  write_axes(out, size);
  std::vector<std::pair<double, double>> coords;
  coords.reserve(trajectory.points.size());
  for (const auto& point : trajectory.points) {
    coords.emplace_back(point.x, point.y);
  }
  write_polyline(out, map, coords, "#0b5394");
  out << "  <circle cx=\"0\" cy=\"0\" r=\"3\" fill=\"#000000\"/>\n";
  out << "</svg>\n";
}

void write_plate_svg(std::ostream& out, const PlateSpec& spec) {
  const double h = spec.observer.gnomon_height;
  const double world_radius = 6.0 * h;
  const Angle<double> min_altitude = degrees(spec.min_altitude_deg);

  std::string comment = "sundial plate; y axis points up (toward the pole);";
  comment += " lat_deg=" + format_double(spec.observer.latitude.degrees());
  comment += " height=" + format_double(h);
  comment += " hours=" + std::to_string(spec.hour_begin) + ".." + std::to_string(spec.hour_end);
  comment += " decl_curves_deg=";
  for (std::size_t i = 0; i < spec.date_curve_declinations_deg.size(); ++i) {
    if (i != 0) {
      comment += '/';
    }
    comment += format_double(spec.date_curve_declinations_deg[i]);
  }
  comment += " size=" + format_double(spec.size);
  comment += " min_altitude_deg=" + format_double(spec.min_altitude_deg);
  comment += " samples=" + std::to_string(spec.samples);

  const CanvasMap map{spec.size * 0.46 / world_radius};
  write_svg_header(out, comment, spec.size);
  write_axes(out, spec.size);

  // Hour lines: rays at the polar-gnomon angle, kept when either solstice
  // lights the hour.
  for (int hour = spec.hour_begin; hour <= spec.hour_end; ++hour) {
    const Angle<double> hour_angle = degrees(15.0 * (hour - 12));
    bool lit = false;
    for (double solstice_deg : {23.44, -23.44}) {
      const SolarState<double> state(degrees(solstice_deg), hour_angle);
      if (solar_altitude(spec.observer.latitude, state).radians() >= min_altitude.radians()) {
        lit = true;
      }
    }
    if (!lit) {
      continue;
    }
    const Angle<double> line_angle =
        polar_gnomon_hour_angle(spec.observer.latitude, hour_angle);
    const double ex = world_radius * sin(line_angle);
    const double ey = world_radius * cos(line_angle);
    out << "  <line x1=\"0\" y1=\"0\" x2=\"" << format_double(map.px(ex))
        << "\" y2=\"" << format_double(map.py(ey))
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << format_double(map.px(1.05 * ex)) << "\" y=\""
        << format_double(map.py(1.05 * ey))
        << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" << hour
        << "</text>\n";
  }

  // Date curves: vertical-gnomon shadow trajectories, clipped to the plate.
  for (double declination_deg : spec.date_curve_declinations_deg) {
    DayTrajectory<double> trajectory{spec.observer, degrees(declination_deg),
                                     {},          ConicClass::Line,
                                     {},          {}};
    try {
      trajectory = sample_trajectory(spec.observer, degrees(declination_deg),
                                     spec.samples, min_altitude);
    } catch (const DegenerateDay&) {
      continue;  // pole at equinox: no shadow curve
    }
    std::vector<std::pair<double, double>> coords;
    coords.reserve(trajectory.points.size());
    for (const auto& point : trajectory.points) {
      if (std::max(std::abs(point.x), std::abs(point.y)) <= world_radius) {
        coords.emplace_back(point.x, point.y);
      }
    }
    write_polyline(out, map, coords, "#0b5394");
    if (!coords.empty()) {
      const auto& anchor = coords[coords.size() / 2];
      out << "  <text x=\"" << format_double(map.px(anchor.first)) << "\" y=\""
          << format_double(map.py(anchor.second) - 4.0)
          << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#0b5394\">"
          << format_double(declination_deg) << "&#176;</text>\n";
    }
  }

  out << "  <circle cx=\"0\" cy=\"0\" r=\"3\" fill=\"#000000\"/>\n";
  out << "</svg>\n";
}

}  // namespace sundial::io
