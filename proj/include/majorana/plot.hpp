#pragma once

// Figure data for Majorana sphere plots: one CSV row per MP cluster plus an
// optional row for the closest product state, and a small SVG rendering.

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "majorana/symstate.hpp"

namespace majorana {

struct PlotRow {
  SpherePoint point;
  int multiplicity = 1;
  std::string role;  // "mp" or "maximizer"
};

inline std::vector<PlotRow> plot_rows(const MajoranaConfig& config, const std::optional<SpherePoint>& maximizer,
                                      double tol = default_degeneracy_tol) {
  std::vector<PlotRow> rows;
  for (const auto& c : cluster_points(config, tol))
    rows.push_back({SpherePoint::from_vector(c.direction).canonical(), c.multiplicity, "mp"});
  if (maximizer) rows.push_back({maximizer->canonical(), 0, "maximizer"});
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<PlotRow>& rows) {
  os << "theta,phi,x,y,z,multiplicity,role\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& r : rows) {
    const Vec3 v = r.point.to_vector();
    line.str("");
    line << r.point.theta << ',' << r.point.phi << ',' << v.x() << ',' << v.y() << ',' << v.z() << ','
         << r.multiplicity << ',' << r.role << '\n';
    os << line.str();
  }
}

/// Orthographic view from the +y direction; far-side points are drawn faded.
inline void write_svg(std::ostream& os, const std::vector<PlotRow>& rows) {
  const double size = 240, c = size / 2, radius = 100;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << ' ' << size << "\">\n";
  os << "  <circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << radius
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <ellipse cx=\"" << c << "\" cy=\"" << c << "\" rx=\"" << radius << "\" ry=\"" << radius * 0.25
     << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"3,3\" stroke-width=\"0.5\"/>\n";
  for (const auto& r : rows) {
    const Vec3 v = r.point.to_vector();
    // x to the right, z up; tilt slightly so the equator is an ellipse
    const double px = c + radius * v.x();
    const double py = c - radius * (0.97 * v.z() - 0.25 * v.y());
    const bool front = v.y() <= 1e-12;
    if (r.role == "maximizer") {
      os << "  <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"7\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\""
         << (front ? "" : " stroke-opacity=\"0.4\"") << "/>\n";
    } else {
      os << "  <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"" << 3.0 + 2.0 * r.multiplicity
         << "\" fill=\"black\"" << (front ? "" : " fill-opacity=\"0.35\"") << "/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace majorana
