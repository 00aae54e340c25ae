#ifndef LCONE_SVG_HPP
#define LCONE_SVG_HPP

// Barycentric triangle plots for rank-3 cones: a direction v in a+ of SL(4)
// maps to (alpha_1(v), alpha_2(v), alpha_3(v)) normalized to sum 1, so the
// chamber walls become the triangle edges. Output is deterministic SVG 1.1.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/subgroups.hpp"

namespace lcone {

struct TrianglePoint {
  double x = 0, y = 0;
};

/// Root-simplex coordinates of a chamber direction; only defined where the
/// alpha_i are non-negative and not all zero.
inline TrianglePoint triangle_projection(const Vec& v) {
  if (v.size() != 4) throw invalid_input_error("triangle_projection: rank-3 ambient only");
  double a1 = simple_root(1, v), a2 = simple_root(2, v), a3 = simple_root(3, v);
  const double s = a1 + a2 + a3;
  if (!(s > 0) || a1 < -1e-9 || a2 < -1e-9 || a3 < -1e-9)
    throw invalid_input_error("triangle_projection: direction not in the chamber");
  a1 /= s;
  a2 /= s;
  a3 /= s;
  // corners: alpha1-vertex left, alpha2-vertex top, alpha3-vertex right
  TrianglePoint p;
  p.x = 40 + 520 * (a3 + 0.5 * a2);
  p.y = 500 - 450 * a2;
  return p;
}

namespace detail {
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}
}  // namespace detail

class TrianglePlot {
 public:
  TrianglePlot() {
    body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
             "width=\"600\" height=\"560\" viewBox=\"0 0 600 560\">\n";
    // the chamber triangle; edges are the walls ker alpha_i
    body_ << "<polygon points=\"40,500 560,500 300,50\" fill=\"#f4f4f4\" "
             "stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    body_ << "<text x=\"30\" y=\"525\" font-size=\"14\">ker a1</text>\n";
    body_ << "<text x=\"540\" y=\"525\" font-size=\"14\">ker a3</text>\n";
    body_ << "<text x=\"290\" y=\"38\" font-size=\"14\">ker a2</text>\n";
  }

  void add_points(const SampledCone& cone, const std::string& color, double radius = 2.5) {
    for (const Vec& d : cone.directions) {
      TrianglePoint p;
      try {
        p = triangle_projection(d);
      } catch (const invalid_input_error&) {
        continue;  // off-chamber samples are not plottable
      }
      body_ << "<circle cx=\"" << detail::fmt(p.x) << "\" cy=\"" << detail::fmt(p.y)
            << "\" r=\"" << detail::fmt(radius) << "\" fill=\"" << color << "\"/>\n";
    }
  }

  void add_segment(const Vec& from, const Vec& to, const std::string& color, double width = 3) {
    const TrianglePoint p = triangle_projection(from), q = triangle_projection(to);
    body_ << "<line x1=\"" << detail::fmt(p.x) << "\" y1=\"" << detail::fmt(p.y) << "\" x2=\""
          << detail::fmt(q.x) << "\" y2=\"" << detail::fmt(q.y) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << detail::fmt(width) << "\"/>\n";
  }

  /// The folded plane as two segments meeting at the V0 ray.
  void add_folded_plane(const FoldedSubgroupCone& plane, const std::string& color = "#3a8f3a") {
    for (const auto& s : plane.sector_pieces) add_segment(s.ray0, s.ray1, color);
  }

  std::string str() const { return body_.str() + "</svg>\n"; }

 private:
  std::ostringstream body_;
};

}  // namespace lcone

#endif
