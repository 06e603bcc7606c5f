#include "linftrees/svg_fan.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "linftrees/topology.hpp"
#include "linftrees/ultrametrics.hpp"

namespace linftrees {

namespace {

struct P2 {
  double x;
  double y;
};

// Orthogonal frame for the plane orthogonal to (1,1,1):
// u = (x12 - x13)/sqrt(2), v = (x12 + x13 - 2 x23)/sqrt(6).
P2 project(double a, double b, double c) {
  return {(a - b) / std::sqrt(2.0), (a + b - 2.0 * c) / std::sqrt(6.0)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // normalize -0
  return buf;
}

constexpr double kCanvas = 420.0;
constexpr double kCenter = kCanvas / 2.0;

std::string at(const P2& p, double scale) {
  return fmt(kCenter + scale * p.x) + "," + fmt(kCenter - scale * p.y);
}

void ray(std::ostringstream& out, const char* cls, const char* dash, double angle_deg,
         double length) {
  const double a = angle_deg * M_PI / 180.0;
  out << "  <line class=\"" << cls << "\" x1=\"" << fmt(kCenter) << "\" y1=\"" << fmt(kCenter)
      << "\" x2=\"" << fmt(kCenter + length * std::cos(a)) << "\" y2=\""
      << fmt(kCenter - length * std::sin(a)) << "\" stroke=\"black\" stroke-dasharray=\"" << dash
      << "\"/>\n";
}

void label(std::ostringstream& out, const char* cls, double angle_deg, double radius,
           const std::string& text, int font) {
  const double a = angle_deg * M_PI / 180.0;
  out << "  <text class=\"" << cls << "\" x=\"" << fmt(kCenter + radius * std::cos(a))
      << "\" y=\"" << fmt(kCenter - radius * std::sin(a)) << "\" font-size=\"" << font
      << "\" text-anchor=\"middle\">" << text << "</text>\n";
}

}  // namespace

std::string svg_fan3(const std::optional<DissimilarityMap>& overlay) {
  if (overlay && overlay->n() != 3) {
    throw std::invalid_argument("svg_fan3: overlay must have exactly 3 leaves");
  }

  double scale = 60.0;
  P2 point{0, 0};
  std::vector<std::pair<P2, bool>> hexagon;  // corner image, resolved-closest flag
  if (overlay) {
    const DissimilarityMap& d = *overlay;
    const Rational r = distance_to_ultrametrics(d);
    point = project(d.values()[0].to_double(), d.values()[1].to_double(),
                    d.values()[2].to_double());
    // hexagon corners of the cube image, counterclockwise from 30 degrees
    static const int kCorners[6][3] = {{1, -1, -1}, {1, 1, -1},  {-1, 1, -1},
                                       {-1, 1, 1},  {-1, -1, 1}, {1, -1, 1}};
    double reach = std::max(std::abs(point.x), std::abs(point.y));
    for (const auto& s : kCorners) {
      RatVector corner(3);
      for (int c = 0; c < 3; ++c) corner[c] = d.values()[c] + r * Rational(s[c]);
      const P2 img = project(corner[0].to_double(), corner[1].to_double(), corner[2].to_double());
      DissimilarityMap u(d.labels(), corner);
      const bool resolved_closest =
          in_closest_set(d, u) && topology_of_ultrametric(u).topology.is_binary();
      hexagon.push_back({img, resolved_closest});
      reach = std::max({reach, std::abs(img.x), std::abs(img.y)});
    }
    if (reach > 1e-9) scale = std::min(60.0, 170.0 / reach);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "  <!-- plane orthogonal to (1,1,1); frame u=(x12-x13)/sqrt2, "
         "v=(x12+x13-2*x23)/sqrt6, y flipped; 1 unit = "
      << fmt(scale) << "px -->\n";
  out << "  <rect width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" fill=\"white\"/>\n";

  // images of the three 2-dimensional ultrametric cones (sector districts)
  ray(out, "ultrametric-ray", "8 5", 90, 200);
  ray(out, "ultrametric-ray", "8 5", 210, 200);
  ray(out, "ultrametric-ray", "8 5", 330, 200);
  label(out, "district-label", 90, 180, "(1(23))", 16);
  label(out, "district-label", 210, 180, "(3(12))", 16);
  label(out, "district-label", 330, 180, "(2(13))", 16);

  // images of the three tie cones: claw plus two cherries
  ray(out, "tie-ray", "2 5", 30, 200);
  ray(out, "tie-ray", "2 5", 150, 200);
  ray(out, "tie-ray", "2 5", 270, 200);
  label(out, "tie-label", 30, 120, "{(123),(1(23)),(2(13))}", 9);
  label(out, "tie-label", 150, 120, "{(123),(1(23)),(3(12))}", 9);
  label(out, "tie-label", 270, 120, "{(123),(2(13)),(3(12))}", 9);

  out << "  <circle class=\"origin\" cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter)
      << "\" r=\"3\" fill=\"black\"/>\n";
  label(out, "origin-label", 7, 22, "{(123)}", 10);

  if (overlay) {
    out << "  <polygon class=\"zonotope\" points=\"";
    for (std::size_t i = 0; i < hexagon.size(); ++i) {
      if (i) out << ' ';
      out << at(hexagon[i].first, scale);
    }
    out << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& [img, filled] : hexagon) {
      if (!filled) continue;
      out << "  <circle class=\"closest-vertex\" cx=\"" << fmt(kCenter + scale * img.x)
          << "\" cy=\"" << fmt(kCenter - scale * img.y) << "\" r=\"4\" fill=\"black\"/>\n";
    }
    out << "  <circle class=\"input-point\" cx=\"" << fmt(kCenter + scale * point.x)
        << "\" cy=\"" << fmt(kCenter - scale * point.y)
        << "\" r=\"3.5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace linftrees
