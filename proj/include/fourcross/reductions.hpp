// The lower-bound chain as executable artifacts: the two auxiliary decision
// problems with direct solvers, and the two linear-time reductions between
// them and the cross problem.
#pragma once

#include "fourcross/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fourcross {

inline constexpr ColorId kRed = 0;
inline constexpr ColorId kBlue = 1;
inline constexpr ColorId kGreen = 2;
inline constexpr ColorId kBlack = 3;

// Two n-element sequences of reals; asks whether some pair from opposite
// sequences has distance strictly between 0 and 1. Duplicates are legal.
struct CougInstance {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

// A 2-colored point set (red = 0, blue = 1); asks whether some red/blue pair
// spans a line of strictly negative slope.
struct CnsInstance {
  std::vector<ColoredPoint> points;
};

inline void validate_two_colored(const CnsInstance& inst) {
  for (const auto& p : inst.points)
    if (p.color != kRed && p.color != kBlue)
      throw std::invalid_argument("2CNS instance: colors must be 0 (red) or 1 (blue)");
}

// Sorted neighbor scan: for each x only the nearest strictly smaller and
// strictly larger y-values can realize a gap in the open interval (0, 1).
inline bool solve_2coug(const CougInstance& inst) {
  if (inst.xs.empty() || inst.ys.empty()) return false;
  std::vector<Rational> ys = inst.ys;
  std::sort(ys.begin(), ys.end());
  const Rational one = 1;
  for (const Rational& x : inst.xs) {
    auto above = std::upper_bound(ys.begin(), ys.end(), x);  // first y > x
    if (above != ys.end() && *above - x < one) return true;
    auto at = std::lower_bound(ys.begin(), ys.end(), x);  // first y >= x
    if (at != ys.begin() && x - *(at - 1) < one) return true;
  }
  return false;
}

// Sweep by increasing x: a pair has negative slope iff some point sees a
// strictly-smaller-x point of the other color with strictly larger y. Points
// of equal x never qualify, so each equal-x group is compared against the
// prefix maxima before being merged in.
inline bool solve_2cns(const CnsInstance& inst) {
  validate_two_colored(inst);
  const auto& pts = inst.points;
  std::vector<std::uint32_t> order(pts.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return pts[a].x < pts[b].x; });

  std::optional<Rational> max_y_red;
  std::optional<Rational> max_y_blue;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && pts[order[j]].x == pts[order[i]].x) ++j;
    for (std::size_t t = i; t < j; ++t) {
      const ColoredPoint& p = pts[order[t]];
      const auto& opposite = p.color == kRed ? max_y_blue : max_y_red;
      if (opposite && *opposite > p.y) return true;
    }
    for (std::size_t t = i; t < j; ++t) {
      const ColoredPoint& p = pts[order[t]];
      auto& own = p.color == kRed ? max_y_red : max_y_blue;
      if (!own || p.y > *own) own = p.y;
    }
    i = j;
  }
  return false;
}

// Maps a gap instance to a slope instance of exactly 4n points: each value v
// becomes a point (v, v) on the main diagonal plus a shifted copy (v-1, v)
// of the same color on the line one unit above.
inline CnsInstance reduce_coug_to_cns(const CougInstance& inst) {
  CnsInstance out;
  out.points.reserve(2 * (inst.xs.size() + inst.ys.size()));
  const Rational one = 1;
  for (const Rational& v : inst.xs) out.points.push_back(ColoredPoint{v, v, kRed});
  for (const Rational& v : inst.ys) out.points.push_back(ColoredPoint{v, v, kBlue});
  const std::size_t diagonal = out.points.size();
  for (std::size_t i = 0; i < diagonal; ++i) {
    const ColoredPoint& p = out.points[i];
    out.points.push_back(ColoredPoint{p.x - one, p.y, p.color});
  }
  return out;
}

// Maps a slope instance to a cross instance by adding a green point beyond
// the top-right corner and a black point beyond the bottom-left corner; the
// result has a cross iff the input has a negative-slope red/blue pair.
inline PointSet reduce_cns_to_4cc(const CnsInstance& inst) {
  validate_two_colored(inst);
  if (inst.points.empty())
    throw std::invalid_argument("reduce_cns_to_4cc: instance must be non-empty");
  Rational min_x = inst.points.front().x;
  Rational max_x = min_x;
  Rational min_y = inst.points.front().y;
  Rational max_y = min_y;
  for (const auto& p : inst.points) {
    if (p.x < min_x) min_x = p.x;
    if (p.x > max_x) max_x = p.x;
    if (p.y < min_y) min_y = p.y;
    if (p.y > max_y) max_y = p.y;
  }
  const Rational one = 1;
  PointSet out;
  out.points = inst.points;
  out.points.push_back(ColoredPoint{max_x + one, max_y + one, kGreen});
  out.points.push_back(ColoredPoint{min_x - one, min_y - one, kBlack});
  return out;
}

}  // namespace fourcross
