// O(n log n) cross decider: intermediate lines between consecutive distinct
// y-values, two sweeps maintaining four candidate sets per line, and a
// constant-size tuple test per line.
#pragma once

#include "fourcross/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fourcross {

// Horizontal line halfway between two consecutive distinct y-values of the
// instance. No input point lies on it: a point is strictly above iff its y
// is >= y_above, strictly below iff <= y_below.
struct IntermediateLine {
  Rational y_above;
  Rational y_below;
  std::size_t index = 0;  // position among the lines, top to bottom

  Rational value() const { return (y_above + y_below) / 2; }
};

enum class ExtremeDir { west, east };  // west keeps minimal x, east maximal x

namespace detail {

// Candidate-set update rule shared by the value- and index-based sweeps.
// Keeps at most four entries of pairwise distinct colors that are extreme in
// the given horizontal direction. Ties on x keep the incumbent.
template <class Entry, class XOf, class ColorOf>
void offer_entry(std::array<Entry, 4>& ents, std::uint8_t& count, const Entry& cand,
                 ExtremeDir dir, XOf&& x_of, ColorOf&& color_of) {
  const auto improves = [&](const Entry& challenger, const Entry& incumbent) {
    return dir == ExtremeDir::west ? x_of(challenger) < x_of(incumbent)
                                   : x_of(challenger) > x_of(incumbent);
  };
  for (std::uint8_t i = 0; i < count; ++i) {
    if (color_of(ents[i]) == color_of(cand)) {
      if (improves(cand, ents[i])) ents[i] = cand;
      return;
    }
  }
  if (count < 4) {
    ents[count++] = cand;
    return;
  }
  // Four colors already present: evict the least extreme entry only if the
  // candidate is strictly more extreme than it.
  std::uint8_t worst = 0;
  for (std::uint8_t i = 1; i < 4; ++i)
    if (improves(ents[worst], ents[i])) worst = i;
  if (improves(cand, ents[worst])) ents[worst] = cand;
}

struct IdxSet {
  std::array<std::uint32_t, 4> idx{};
  std::uint8_t count = 0;

  std::span<const std::uint32_t> entries() const { return {idx.data(), count}; }
};

// Instance sorted by non-decreasing y, ties in input order, grouped into
// runs of equal y. Run r covers pts[run_start[r], run_start[r+1]).
struct SortedView {
  std::vector<ColoredPoint> pts;
  std::vector<std::uint32_t> run_start;

  std::size_t runs() const { return run_start.empty() ? 0 : run_start.size() - 1; }
  const Rational& run_y(std::size_t r) const { return pts[run_start[r]].y; }
};

inline SortedView sort_by_y(const PointSet& set) {
  SortedView sv;
  sv.pts = set.points;
  std::stable_sort(sv.pts.begin(), sv.pts.end(),
                   [](const ColoredPoint& a, const ColoredPoint& b) { return a.y < b.y; });
  sv.run_start.reserve(sv.pts.size() + 1);
  for (std::uint32_t i = 0; i < sv.pts.size(); ++i)
    if (i == 0 || sv.pts[i].y != sv.pts[i - 1].y) sv.run_start.push_back(i);
  if (!sv.pts.empty()) sv.run_start.push_back(static_cast<std::uint32_t>(sv.pts.size()));
  return sv;
}

// Line j (0 = topmost) sits between the runs of rank m-1-j and m-2-j.
inline const Rational& line_y_above(const SortedView& sv, std::size_t j) {
  return sv.run_y(sv.runs() - 1 - j);
}
inline const Rational& line_y_below(const SortedView& sv, std::size_t j) {
  return sv.run_y(sv.runs() - 2 - j);
}

// Top-down sweep. After absorbing each run the running sets summarize all
// points strictly above the next line; f(line_index, west_set, east_set)
// returns false to stop early. Returns false iff stopped.
template <class F>
bool sweep_upper(const SortedView& sv, F&& f) {
  const std::size_t m = sv.runs();
  if (m < 2) return true;
  IdxSet west, east;
  const auto x_of = [&](std::uint32_t i) -> const Rational& { return sv.pts[i].x; };
  const auto color_of = [&](std::uint32_t i) { return sv.pts[i].color; };
  for (std::size_t r = m; r-- > 1;) {
    for (std::uint32_t i = sv.run_start[r]; i < sv.run_start[r + 1]; ++i) {
      offer_entry(west.idx, west.count, i, ExtremeDir::west, x_of, color_of);
      offer_entry(east.idx, east.count, i, ExtremeDir::east, x_of, color_of);
    }
    if (!f(m - 1 - r, west, east)) return false;
  }
  return true;
}

// Bottom-up sweep for the sets of points strictly below each line.
template <class F>
bool sweep_lower(const SortedView& sv, F&& f) {
  const std::size_t m = sv.runs();
  if (m < 2) return true;
  IdxSet west, east;
  const auto x_of = [&](std::uint32_t i) -> const Rational& { return sv.pts[i].x; };
  const auto color_of = [&](std::uint32_t i) { return sv.pts[i].color; };
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::uint32_t i = sv.run_start[r]; i < sv.run_start[r + 1]; ++i) {
      offer_entry(west.idx, west.count, i, ExtremeDir::west, x_of, color_of);
      offer_entry(east.idx, east.count, i, ExtremeDir::east, x_of, color_of);
    }
    if (!f(m - 2 - r, west, east)) return false;
  }
  return true;
}

// Searches the <= 4^4 one-per-set tuples in lexicographic order of set
// positions for four pairwise differently colored points whose upper open
// x-interval (q.x, p.x) meets the lower one (r.x, s.x). The skips only drop
// tuples that cannot satisfy the final interval test.
template <class Entry, class XOf, class ColorOf, class PointOf>
std::optional<Cross> find_cross_tuple(std::span<const Entry> ne, std::span<const Entry> nw,
                                      std::span<const Entry> sw, std::span<const Entry> se,
                                      const Rational& y_above, const Rational& y_below,
                                      XOf&& x_of, ColorOf&& color_of, PointOf&& point_of) {
  for (const Entry& p : ne) {
    for (const Entry& q : nw) {
      if (color_of(q) == color_of(p)) continue;
      if (!(x_of(q) < x_of(p))) continue;
      for (const Entry& r : sw) {
        if (color_of(r) == color_of(p) || color_of(r) == color_of(q)) continue;
        if (!(x_of(r) < x_of(p))) continue;
        for (const Entry& s : se) {
          if (color_of(s) == color_of(p) || color_of(s) == color_of(q) ||
              color_of(s) == color_of(r))
            continue;
          const Rational& x_lo = std::max(x_of(q), x_of(r));
          const Rational& x_hi = std::min(x_of(p), x_of(s));
          if (!(x_lo < x_hi)) continue;
          Cross cross;
          cross.center = Point{(x_lo + x_hi) / 2, (y_above + y_below) / 2};
          cross.witness = {point_of(p), point_of(q), point_of(r), point_of(s)};
          return cross;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// At most four differently colored points extreme in one horizontal
// direction among the population they summarize.
class CandidateSet {
 public:
  explicit CandidateSet(ExtremeDir dir) : dir_(dir) {}
  CandidateSet(ExtremeDir dir, std::span<const ColoredPoint> entries) : dir_(dir) {
    assert(entries.size() <= 4);
    for (const ColoredPoint& p : entries) ents_[count_++] = p;
  }

  ExtremeDir direction() const { return dir_; }
  std::size_t size() const { return count_; }
  std::span<const ColoredPoint> entries() const { return {ents_.data(), count_}; }

  // Algorithm-2 style update against one more point of the population.
  void offer(const ColoredPoint& p) {
    detail::offer_entry(
        ents_, count_, p, dir_, [](const ColoredPoint& e) -> const Rational& { return e.x; },
        [](const ColoredPoint& e) { return e.color; });
  }

 private:
  ExtremeDir dir_;
  std::array<ColoredPoint, 4> ents_{};
  std::uint8_t count_ = 0;
};

// Tests one point against the west and east candidate sets of one side.
inline void test_point(const ColoredPoint& p, CandidateSet& west, CandidateSet& east) {
  west.offer(p);
  east.offer(p);
}

// Distinct y-values, strictly descending.
inline std::vector<Rational> distinct_ys(const PointSet& set) {
  std::vector<Rational> ys;
  ys.reserve(set.points.size());
  for (const auto& p : set.points) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end(), [](const Rational& a, const Rational& b) { return b < a; });
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

// One line between each pair of consecutive distinct y-values, top to bottom.
inline std::vector<IntermediateLine> intermediate_lines(std::span<const Rational> ys_descending) {
  std::vector<IntermediateLine> lines;
  if (ys_descending.size() < 2) return lines;
  lines.reserve(ys_descending.size() - 1);
  for (std::size_t i = 0; i + 1 < ys_descending.size(); ++i) {
    assert(ys_descending[i + 1] < ys_descending[i]);
    lines.push_back(IntermediateLine{ys_descending[i], ys_descending[i + 1], i});
  }
  return lines;
}

struct LineCandidates {
  IntermediateLine line;
  CandidateSet ne{ExtremeDir::east};
  CandidateSet nw{ExtremeDir::west};
  CandidateSet sw{ExtremeDir::west};
  CandidateSet se{ExtremeDir::east};
};

// Per-line candidate sets for every intermediate line: NE/NW summarize the
// points strictly above, SW/SE the points strictly below. Each point is
// tested once per sweep.
inline std::vector<LineCandidates> candidate_sweeps(const PointSet& set) {
  const detail::SortedView sv = detail::sort_by_y(set);
  const std::size_t m = sv.runs();
  std::vector<LineCandidates> out;
  if (m < 2) return out;
  out.resize(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j)
    out[j].line = IntermediateLine{detail::line_y_above(sv, j), detail::line_y_below(sv, j), j};

  const auto materialize = [&](const detail::IdxSet& s, ExtremeDir dir) {
    std::array<ColoredPoint, 4> pts;
    for (std::uint8_t i = 0; i < s.count; ++i) pts[i] = sv.pts[s.idx[i]];
    return CandidateSet(dir, {pts.data(), s.count});
  };
  detail::sweep_upper(sv, [&](std::size_t j, const detail::IdxSet& west,
                              const detail::IdxSet& east) {
    out[j].nw = materialize(west, ExtremeDir::west);
    out[j].ne = materialize(east, ExtremeDir::east);
    return true;
  });
  detail::sweep_lower(sv, [&](std::size_t j, const detail::IdxSet& west,
                              const detail::IdxSet& east) {
    out[j].sw = materialize(west, ExtremeDir::west);
    out[j].se = materialize(east, ExtremeDir::east);
    return true;
  });
  return out;
}

// Searches the candidate sets of one line for a cross centered on it.
inline std::optional<Cross> test_cross(const CandidateSet& ne, const CandidateSet& nw,
                                       const CandidateSet& sw, const CandidateSet& se,
                                       const IntermediateLine& line) {
  return detail::find_cross_tuple<ColoredPoint>(
      ne.entries(), nw.entries(), sw.entries(), se.entries(), line.y_above, line.y_below,
      [](const ColoredPoint& e) -> const Rational& { return e.x; },
      [](const ColoredPoint& e) { return e.color; },
      [](const ColoredPoint& e) -> const ColoredPoint& { return e; });
}

// Full decision procedure. Returns a verified cross iff one exists.
inline std::optional<Cross> decide(const PointSet& set) {
  if (set.points.size() < 4) return std::nullopt;
  if (!set.has_at_least_colors(4)) return std::nullopt;
  const detail::SortedView sv = detail::sort_by_y(set);
  const std::size_t m = sv.runs();
  if (m < 2) return std::nullopt;

  std::vector<detail::IdxSet> sw_snap(m - 1);
  std::vector<detail::IdxSet> se_snap(m - 1);
  detail::sweep_lower(sv, [&](std::size_t j, const detail::IdxSet& west,
                              const detail::IdxSet& east) {
    sw_snap[j] = west;
    se_snap[j] = east;
    return true;
  });

  const auto x_of = [&](std::uint32_t i) -> const Rational& { return sv.pts[i].x; };
  const auto color_of = [&](std::uint32_t i) { return sv.pts[i].color; };
  const auto point_of = [&](std::uint32_t i) -> const ColoredPoint& { return sv.pts[i]; };

  std::optional<Cross> found;
  detail::sweep_upper(sv, [&](std::size_t j, const detail::IdxSet& west,
                              const detail::IdxSet& east) {
    found = detail::find_cross_tuple<std::uint32_t>(
        east.entries(), west.entries(), sw_snap[j].entries(), se_snap[j].entries(),
        detail::line_y_above(sv, j), detail::line_y_below(sv, j), x_of, color_of, point_of);
    return !found.has_value();
  });
  return found;
}

}  // namespace fourcross
