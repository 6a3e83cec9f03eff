// SVG rendering of instances and witnesses. Rendering is the one place
// coordinates go through double; exactness only matters to the solvers.
#pragma once

#include "fourcross/geometry.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>

namespace fourcross {

namespace detail {

// Colorblind-leaning cycle; color ids beyond the palette wrap around.
inline constexpr std::array<const char*, 12> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#2b2b2b", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8",
};

inline const char* palette_color(ColorId c) { return kPalette[c % kPalette.size()]; }

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(8);
  os << v;
  return os.str();
}

}  // namespace detail

// Standalone SVG document. Witness points get a ring marker and the cross is
// drawn as two full extent lines through its center. The y axis is flipped so
// the picture matches plane coordinates.
inline std::string emit_svg(const PointSet& ps, const std::optional<Cross>& cross,
                            double side = 640.0) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  const auto absorb = [&](double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const auto& p : ps.points) absorb(p.x.to_double(), p.y.to_double());
  if (cross) absorb(cross->center.x.to_double(), cross->center.y.to_double());

  double span_x = max_x - min_x;
  double span_y = max_y - min_y;
  if (span_x <= 0) { min_x -= 1; span_x = 2; }
  if (span_y <= 0) { min_y -= 1; span_y = 2; }
  const double margin = 0.05 * std::max(span_x, span_y);
  min_x -= margin;
  min_y -= margin;
  span_x += 2 * margin;
  span_y += 2 * margin;

  const double scale = side / std::max(span_x, span_y);
  const double width = span_x * scale;
  const double height = span_y * scale;
  const auto sx = [&](double x) { return (x - min_x) * scale; };
  const auto sy = [&](double y) { return height - (y - min_y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width)
      << "\" height=\"" << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width)
      << ' ' << detail::fmt(height) << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (cross) {
    const double cx = sx(cross->center.x.to_double());
    const double cy = sy(cross->center.y.to_double());
    svg << "  <line class=\"cross\" x1=\"" << detail::fmt(cx) << "\" y1=\"0\" x2=\""
        << detail::fmt(cx) << "\" y2=\"" << detail::fmt(height)
        << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    svg << "  <line class=\"cross\" x1=\"0\" y1=\"" << detail::fmt(cy) << "\" x2=\""
        << detail::fmt(width) << "\" y2=\"" << detail::fmt(cy)
        << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    for (const auto& w : cross->witness) {
      svg << "  <circle class=\"witness\" cx=\"" << detail::fmt(sx(w.x.to_double()))
          << "\" cy=\"" << detail::fmt(sy(w.y.to_double()))
          << "\" r=\"9\" fill=\"none\" stroke=\"" << detail::palette_color(w.color)
          << "\" stroke-width=\"2\"/>\n";
    }
  }

  for (const auto& p : ps.points) {
    svg << "  <circle class=\"pt\" cx=\"" << detail::fmt(sx(p.x.to_double())) << "\" cy=\""
        << detail::fmt(sy(p.y.to_double())) << "\" r=\"4\" fill=\""
        << detail::palette_color(p.color) << "\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fourcross
