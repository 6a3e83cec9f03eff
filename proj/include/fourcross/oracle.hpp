// Brute-force deciders and the from-scratch candidate-set characterization.
// Deliberately simple and slow; used as ground truth in tests.
#pragma once

#include "fourcross/decide.hpp"
#include "fourcross/geometry.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

namespace fourcross {

namespace detail {

inline std::vector<Rational> distinct_sorted(std::vector<Rational> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

// Up to four differently colored representatives seen in one quadrant.
struct QuadrantReps {
  std::array<const ColoredPoint*, 4> pts{};
  std::uint8_t count = 0;

  void add(const ColoredPoint& p) {
    for (std::uint8_t i = 0; i < count; ++i)
      if (pts[i]->color == p.color) return;
    if (count < 4) pts[count++] = &p;
  }
};

}  // namespace detail

// Enumerates every candidate center on the midpoint grid between consecutive
// distinct x-values and consecutive distinct y-values. A cross center, if any
// exists, can be moved to such a grid point without changing any quadrant
// membership. Per center, keeps at most four differently colored points per
// quadrant and searches the assignments for pairwise distinct colors;
// truncation to four is lossless for a family of four sets. O(n^3) worst case.
inline std::optional<Cross> oracle_centers(const PointSet& set) {
  if (set.points.size() < 4) return std::nullopt;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(set.points.size());
  ys.reserve(set.points.size());
  for (const auto& p : set.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  xs = detail::distinct_sorted(std::move(xs));
  ys = detail::distinct_sorted(std::move(ys));

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational cx = (xs[i] + xs[i + 1]) / 2;
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      const Point center{cx, (ys[j] + ys[j + 1]) / 2};
      std::array<detail::QuadrantReps, 4> reps;
      for (const auto& p : set.points)
        if (auto q = quadrant_of(center, p)) reps[static_cast<unsigned>(*q)].add(p);
      bool all_hit = true;
      for (const auto& r : reps) all_hit &= r.count > 0;
      if (!all_hit) continue;
      for (std::uint8_t a = 0; a < reps[0].count; ++a)
        for (std::uint8_t b = 0; b < reps[1].count; ++b) {
          if (reps[1].pts[b]->color == reps[0].pts[a]->color) continue;
          for (std::uint8_t c = 0; c < reps[2].count; ++c) {
            if (reps[2].pts[c]->color == reps[0].pts[a]->color ||
                reps[2].pts[c]->color == reps[1].pts[b]->color)
              continue;
            for (std::uint8_t d = 0; d < reps[3].count; ++d) {
              if (reps[3].pts[d]->color == reps[0].pts[a]->color ||
                  reps[3].pts[d]->color == reps[1].pts[b]->color ||
                  reps[3].pts[d]->color == reps[2].pts[c]->color)
                continue;
              Cross cross;
              cross.center = center;
              cross.witness = {*reps[0].pts[a], *reps[1].pts[b], *reps[2].pts[c],
                               *reps[3].pts[d]};
              return cross;
            }
          }
        }
    }
  }
  return std::nullopt;
}

// Enumerates all 4-subsets with pairwise distinct colors and runs the
// positive-area test on each. O(n^4); agrees with oracle_centers.
inline std::optional<Cross> oracle_subsets(const PointSet& set) {
  const auto& pts = set.points;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (pts[b].color == pts[a].color) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (pts[c].color == pts[a].color || pts[c].color == pts[b].color) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (pts[d].color == pts[a].color || pts[d].color == pts[b].color ||
              pts[d].color == pts[c].color)
            continue;
          const std::array<ColoredPoint, 4> four = {pts[a], pts[b], pts[c], pts[d]};
          if (auto cross = positive_area_rh4(four)) return cross;
        }
      }
    }
  return std::nullopt;
}

enum class LineSide { above, below };

struct ColorExtreme {
  ColorId color;
  Rational x;
};

// Per-color extreme x among the points on one side of a line, sorted
// best-first (ties by color id). The first <= 4 entries are the reference
// characterization a swept candidate set must match.
inline std::vector<ColorExtreme> per_color_extremes(const PointSet& set,
                                                    const IntermediateLine& line,
                                                    LineSide side, ExtremeDir dir) {
  const Rational edge = line.y_above + line.y_below;
  std::vector<ColorExtreme> ext;
  for (const auto& p : set.points) {
    const Rational twice_y = p.y * 2;
    const bool on_side = side == LineSide::above ? twice_y > edge : twice_y < edge;
    if (!on_side) continue;
    auto it = std::find_if(ext.begin(), ext.end(),
                           [&](const ColorExtreme& e) { return e.color == p.color; });
    if (it == ext.end()) {
      ext.push_back(ColorExtreme{p.color, p.x});
    } else if (dir == ExtremeDir::east ? p.x > it->x : p.x < it->x) {
      it->x = p.x;
    }
  }
  std::sort(ext.begin(), ext.end(), [&](const ColorExtreme& a, const ColorExtreme& b) {
    if (a.x != b.x) return dir == ExtremeDir::east ? b.x < a.x : a.x < b.x;
    return a.color < b.color;
  });
  return ext;
}

// The <= 4 colors with the best per-color extreme on the given side.
inline std::vector<ColorExtreme> candidate_set_oracle(const PointSet& set,
                                                      const IntermediateLine& line,
                                                      LineSide side, ExtremeDir dir) {
  std::vector<ColorExtreme> ext = per_color_extremes(set, line, side, dir);
  if (ext.size() > 4) ext.resize(4);
  return ext;
}

// Checks a swept candidate set against the full per-color extremes of its
// population: every entry attains its color's extreme, the set is as large
// as possible, and when colors were dropped every unrepresented color's
// extreme is no better than every represented one's.
inline bool matches_characterization(const CandidateSet& cs,
                                     std::span<const ColorExtreme> extremes) {
  const auto entries = cs.entries();
  if (entries.size() != std::min<std::size_t>(4, extremes.size())) return false;
  for (const ColoredPoint& e : entries) {
    auto it = std::find_if(extremes.begin(), extremes.end(),
                           [&](const ColorExtreme& ex) { return ex.color == e.color; });
    if (it == extremes.end() || it->x != e.x) return false;
  }
  if (extremes.size() <= 4) return true;
  const auto represented = [&](ColorId color) {
    for (const ColoredPoint& e : entries)
      if (e.color == color) return true;
    return false;
  };
  const bool east = cs.direction() == ExtremeDir::east;
  const Rational* worst_rep = nullptr;
  for (const ColoredPoint& e : entries)
    if (!worst_rep || (east ? e.x < *worst_rep : e.x > *worst_rep)) worst_rep = &e.x;
  for (const ColorExtreme& ex : extremes) {
    if (represented(ex.color)) continue;
    // extremes are sorted best-first, so the first unrepresented color is
    // the strongest excluded one.
    return east ? ex.x <= *worst_rep : ex.x >= *worst_rep;
  }
  return true;
}

}  // namespace fourcross
