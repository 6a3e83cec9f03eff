// Colored-point data model, open-quadrant predicates, and the 4-point
// positive-area test that grounds the cross/positive-area equivalence.
#pragma once

#include "fourcross/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fourcross {

// Color ids need not be contiguous or dense; equality is id equality.
using ColorId = std::uint32_t;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct ColoredPoint {
  Rational x;
  Rational y;
  ColorId color = 0;

  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ColoredPoint& p) {
  return os << "(" << p.x << ", " << p.y << "; c" << p.color << ")";
}

// A problem instance: an ordered multiset of colored points. Coincident
// points and repeated coordinates are legal; no general position assumed.
struct PointSet {
  std::vector<ColoredPoint> points;

  std::size_t size() const { return points.size(); }

  bool has_at_least_colors(std::size_t want) const {
    std::unordered_set<ColorId> seen;
    for (const auto& p : points) {
      seen.insert(p.color);
      if (seen.size() >= want) return true;
    }
    return seen.size() >= want;
  }

  std::size_t distinct_color_count() const {
    std::unordered_set<ColorId> seen;
    for (const auto& p : points) seen.insert(p.color);
    return seen.size();
  }
};

// Open quadrants of a center point. Q1 = open north-east, Q2 = open
// north-west, Q3 = open south-west, Q4 = open south-east. Points sharing an
// x or y coordinate with the center lie in no quadrant.
enum class Quadrant : unsigned { Q1 = 0, Q2 = 1, Q3 = 2, Q4 = 3 };

inline constexpr std::array<Quadrant, 4> kQuadrants = {Quadrant::Q1, Quadrant::Q2,
                                                       Quadrant::Q3, Quadrant::Q4};

inline std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::Q1: return "Q1";
    case Quadrant::Q2: return "Q2";
    case Quadrant::Q3: return "Q3";
    case Quadrant::Q4: return "Q4";
  }
  return "?";
}

inline std::optional<Quadrant> parse_quadrant(std::string_view s) {
  for (Quadrant q : kQuadrants)
    if (s == to_string(q)) return q;
  return std::nullopt;
}

// A positive certificate: a center plus one witness per open quadrant.
// verify_cross() checks the full invariant (membership, pairwise distinct
// witness colors, strict open-quadrant containment).
struct Cross {
  Point center;
  std::array<ColoredPoint, 4> witness;  // indexed by Quadrant

  const ColoredPoint& witness_in(Quadrant q) const {
    return witness[static_cast<unsigned>(q)];
  }
  ColoredPoint& witness_in(Quadrant q) { return witness[static_cast<unsigned>(q)]; }
};

inline std::optional<Quadrant> quadrant_of(const Point& center, const ColoredPoint& p) {
  if (p.x == center.x || p.y == center.y) return std::nullopt;
  const bool east = p.x > center.x;
  const bool north = p.y > center.y;
  if (east && north) return Quadrant::Q1;
  if (!east && north) return Quadrant::Q2;
  if (!east && !north) return Quadrant::Q3;
  return Quadrant::Q4;
}

// Decides whether some center has all four open quadrants hit by the four
// given points, one each; equivalently whether their rectilinear convex hull
// has positive area. Colors are not constrained here. Tries role assignments
// in lexicographic order of input positions; the center of a feasible
// assignment is the midpoint of the feasible open rectangle.
inline std::optional<Cross> positive_area_rh4(std::span<const ColoredPoint> pts) {
  if (pts.size() != 4)
    throw std::invalid_argument("positive_area_rh4: expected exactly 4 points");

  std::array<int, 4> role = {0, 1, 2, 3};  // role[i] -> index assigned to Q(i+1)
  do {
    const ColoredPoint& a = pts[role[0]];  // Q1
    const ColoredPoint& b = pts[role[1]];  // Q2
    const ColoredPoint& c = pts[role[2]];  // Q3
    const ColoredPoint& d = pts[role[3]];  // Q4
    const Rational& x_lo = std::max(b.x, c.x);
    const Rational& x_hi = std::min(a.x, d.x);
    if (!(x_lo < x_hi)) continue;
    const Rational& y_lo = std::max(c.y, d.y);
    const Rational& y_hi = std::min(a.y, b.y);
    if (!(y_lo < y_hi)) continue;
    Cross cross;
    cross.center = Point{(x_lo + x_hi) / 2, (y_lo + y_hi) / 2};
    cross.witness = {a, b, c, d};
    return cross;
  } while (std::next_permutation(role.begin(), role.end()));
  return std::nullopt;
}

// Re-verification used on every witness any decider or oracle returns.
inline bool verify_cross(const Cross& cross, const PointSet& set) {
  for (Quadrant q : kQuadrants) {
    const ColoredPoint& w = cross.witness_in(q);
    if (quadrant_of(cross.center, w) != q) return false;
    if (std::find(set.points.begin(), set.points.end(), w) == set.points.end())
      return false;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (cross.witness[i].color == cross.witness[j].color) return false;
  return true;
}

}  // namespace fourcross
