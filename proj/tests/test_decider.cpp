#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

using namespace fourcross;
using namespace testsupport;

namespace {

ColoredPoint cp(long long x, long long y, ColorId c) {
  return ColoredPoint{Rational(x), Rational(y), c};
}

// Entries as a comparable multiset of (color, x) pairs.
std::multiset<std::pair<ColorId, std::string>> snapshot(const CandidateSet& cs) {
  std::multiset<std::pair<ColorId, std::string>> out;
  for (const auto& e : cs.entries()) out.emplace(e.color, e.x.str());
  return out;
}

}  // namespace

TEST_CASE("candidate update keeps per-color extremes") {
  CandidateSet east(ExtremeDir::east);
  east.offer(cp(1, 0, 0));
  east.offer(cp(2, 0, 1));
  east.offer(cp(0, 0, 1));  // worse for color 1, ignored
  east.offer(cp(3, 0, 1));  // better for color 1, replaces
  CHECK(snapshot(east) == std::multiset<std::pair<ColorId, std::string>>{{0, "1"}, {1, "3"}});

  CandidateSet west(ExtremeDir::west);
  west.offer(cp(1, 0, 0));
  west.offer(cp(2, 0, 1));
  west.offer(cp(5, 0, 1));   // worse for west, ignored
  west.offer(cp(-2, 0, 1));  // better for west, replaces
  CHECK(snapshot(west) == std::multiset<std::pair<ColorId, std::string>>{{0, "1"}, {1, "-2"}});
}

TEST_CASE("candidate update caps at four colors and evicts the weakest") {
  CandidateSet east(ExtremeDir::east);
  east.offer(cp(1, 0, 0));
  east.offer(cp(3, 0, 1));
  east.offer(cp(2, 0, 2));
  east.offer(cp(1, 0, 3));
  REQUIRE(east.size() == 4);

  SECTION("a strictly stronger new color replaces the weakest entry") {
    east.offer(cp(2, 0, 4));
    // one of the two x=1 entries is gone, the newcomer is in
    CHECK(east.size() == 4);
    const auto snap = snapshot(east);
    CHECK(snap.count({4, "2"}) == 1);
    CHECK(snap.count({1, "3"}) == 1);
    CHECK(snap.count({2, "2"}) == 1);
  }
  SECTION("the first scanned weakest entry is the one evicted") {
    east.offer(cp(9, 0, 4));
    // weakest were colors 0 and 3 at x=1; color 0 sits earlier in the set
    const auto snap = snapshot(east);
    CHECK(snap.count({0, "1"}) == 0);
    CHECK(snap.count({3, "1"}) == 1);
    CHECK(snap.count({4, "9"}) == 1);
  }
  SECTION("a tying new color does not displace an incumbent") {
    east.offer(cp(1, 0, 4));
    const auto snap = snapshot(east);
    CHECK(snap.count({4, "1"}) == 0);
    CHECK(snap.count({0, "1"}) == 1);
    CHECK(snap.count({3, "1"}) == 1);
  }
}

TEST_CASE("candidate update breaks same-color ties toward the incumbent") {
  CandidateSet east(ExtremeDir::east);
  const auto first = ColoredPoint{Rational(2), Rational(10), 0};
  const auto tying = ColoredPoint{Rational(2), Rational(20), 0};
  east.offer(first);
  east.offer(tying);
  REQUIRE(east.size() == 1);
  CHECK(east.entries()[0].y == Rational(10));
}

TEST_CASE("test_point feeds both directions at once") {
  CandidateSet west(ExtremeDir::west);
  CandidateSet east(ExtremeDir::east);
  test_point(cp(4, 0, 0), west, east);
  test_point(cp(-1, 0, 0), west, east);
  test_point(cp(7, 0, 1), west, east);
  CHECK(snapshot(west) == std::multiset<std::pair<ColorId, std::string>>{{0, "-1"}, {1, "7"}});
  CHECK(snapshot(east) == std::multiset<std::pair<ColorId, std::string>>{{0, "4"}, {1, "7"}});
}

TEST_CASE("distinct y values come out descending and deduplicated") {
  PointSet ps;
  ps.points = {cp(0, 2, 0), cp(1, 4, 0), cp(2, 2, 1), cp(3, 0, 2), cp(4, 4, 3)};
  const auto ys = distinct_ys(ps);
  REQUIRE(ys.size() == 3);
  CHECK(ys[0] == Rational(4));
  CHECK(ys[1] == Rational(2));
  CHECK(ys[2] == Rational(0));
}

TEST_CASE("intermediate lines sit halfway between consecutive levels") {
  const std::vector<Rational> ys = {Rational(4), Rational(2), Rational(0)};
  const auto lines = intermediate_lines(ys);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].index == 0);
  CHECK(lines[0].y_above == Rational(4));
  CHECK(lines[0].y_below == Rational(2));
  CHECK(lines[0].value() == Rational(3));
  CHECK(lines[1].index == 1);
  CHECK(lines[1].value() == Rational(1));

  CHECK(intermediate_lines(std::vector<Rational>{Rational(5)}).empty());
  CHECK(intermediate_lines(std::vector<Rational>{}).empty());

  // strictly between, never through a point level
  for (const auto& ln : lines) {
    CHECK(ln.y_below < ln.value());
    CHECK(ln.value() < ln.y_above);
  }
}

TEST_CASE("candidate sweeps summarize both sides of every line") {
  PointSet ps;
  ps.points = {cp(-1, 2, 0), cp(5, 2, 1), cp(0, 4, 0), cp(3, 4, 1)};
  const auto lines = candidate_sweeps(ps);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].line.value() == Rational(3));
  CHECK(snapshot(lines[0].nw) == std::multiset<std::pair<ColorId, std::string>>{{0, "0"}, {1, "3"}});
  CHECK(snapshot(lines[0].ne) == std::multiset<std::pair<ColorId, std::string>>{{0, "0"}, {1, "3"}});
  CHECK(snapshot(lines[0].sw) == std::multiset<std::pair<ColorId, std::string>>{{0, "-1"}, {1, "5"}});
  CHECK(snapshot(lines[0].se) == std::multiset<std::pair<ColorId, std::string>>{{0, "-1"}, {1, "5"}});
}

TEST_CASE("swept sets match the per-color extreme characterization") {
  SplitMix64 rng{555};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(39);
    const std::size_t k = 1 + rng.below(5);
    const auto ps = random_instance(rng, n, k, 8);
    const auto swept = candidate_sweeps(ps);
    const auto lines = intermediate_lines(distinct_ys(ps));
    REQUIRE(swept.size() == lines.size());
    for (std::size_t j = 0; j < swept.size(); ++j) {
      CAPTURE(trial, j);
      REQUIRE(swept[j].line.value() == lines[j].value());
      const auto& ln = swept[j].line;
      CHECK(matches_characterization(
          swept[j].nw, per_color_extremes(ps, ln, LineSide::above, ExtremeDir::west)));
      CHECK(matches_characterization(
          swept[j].ne, per_color_extremes(ps, ln, LineSide::above, ExtremeDir::east)));
      CHECK(matches_characterization(
          swept[j].sw, per_color_extremes(ps, ln, LineSide::below, ExtremeDir::west)));
      CHECK(matches_characterization(
          swept[j].se, per_color_extremes(ps, ln, LineSide::below, ExtremeDir::east)));
    }
  }
}

TEST_CASE("test_cross intersects the horizontal intervals of a tuple") {
  const IntermediateLine line{Rational(3), Rational(1), 0};
  const auto mk = [](std::vector<ColoredPoint> pts, ExtremeDir dir) {
    return CandidateSet(dir, pts);
  };

  SECTION("feasible tuple yields the interval midpoint center") {
    const auto cross = test_cross(mk({cp(2, 4, 1)}, ExtremeDir::east),
                                  mk({cp(0, 3, 0)}, ExtremeDir::west),
                                  mk({cp(1, 0, 2)}, ExtremeDir::west),
                                  mk({cp(3, 1, 3)}, ExtremeDir::east), line);
    REQUIRE(cross.has_value());
    CHECK(cross->center.x == Rational(BigInt(3), BigInt(2)));
    CHECK(cross->center.y == Rational(2));
    CHECK(cross->witness_in(Quadrant::Q1).color == 1);
    CHECK(cross->witness_in(Quadrant::Q2).color == 0);
    CHECK(cross->witness_in(Quadrant::Q3).color == 2);
    CHECK(cross->witness_in(Quadrant::Q4).color == 3);
  }
  SECTION("empty upper interval is rejected") {
    const auto cross = test_cross(mk({cp(0, 4, 1)}, ExtremeDir::east),
                                  mk({cp(2, 3, 0)}, ExtremeDir::west),
                                  mk({cp(1, 0, 2)}, ExtremeDir::west),
                                  mk({cp(3, 1, 3)}, ExtremeDir::east), line);
    CHECK(!cross.has_value());
  }
  SECTION("disjoint upper and lower intervals are rejected") {
    const auto cross = test_cross(mk({cp(2, 4, 1)}, ExtremeDir::east),
                                  mk({cp(0, 3, 0)}, ExtremeDir::west),
                                  mk({cp(5, 0, 2)}, ExtremeDir::west),
                                  mk({cp(9, 1, 3)}, ExtremeDir::east), line);
    CHECK(!cross.has_value());
  }
  SECTION("touching intervals are rejected, openness is strict") {
    const auto cross = test_cross(mk({cp(2, 4, 1)}, ExtremeDir::east),
                                  mk({cp(0, 3, 0)}, ExtremeDir::west),
                                  mk({cp(2, 0, 2)}, ExtremeDir::west),
                                  mk({cp(9, 1, 3)}, ExtremeDir::east), line);
    CHECK(!cross.has_value());
  }
  SECTION("color repeats across quadrants are rejected") {
    const auto cross = test_cross(mk({cp(2, 4, 0)}, ExtremeDir::east),
                                  mk({cp(0, 3, 0)}, ExtremeDir::west),
                                  mk({cp(1, 0, 2)}, ExtremeDir::west),
                                  mk({cp(3, 1, 3)}, ExtremeDir::east), line);
    CHECK(!cross.has_value());
  }
}

TEST_CASE("decide finds a cross on a spread four coloring") {
  PointSet ps;
  ps.points = {cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2), cp(3, 1, 3)};
  const auto cross = decide(ps);
  REQUIRE(cross.has_value());
  CHECK(verify_cross(*cross, ps));
  CHECK(Rational(1) < cross->center.x);
  CHECK(cross->center.x < Rational(2));
}

TEST_CASE("decide short-circuits impossible inputs") {
  PointSet ps;
  CHECK(!decide(ps).has_value());

  ps.points = {cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2)};
  CHECK(!decide(ps).has_value());  // fewer than four points

  ps.points = {cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2), cp(3, 1, 2)};
  CHECK(!decide(ps).has_value());  // fewer than four colors

  ps.points = {cp(0, 5, 0), cp(1, 5, 1), cp(2, 5, 2), cp(3, 5, 3)};
  CHECK(!decide(ps).has_value());  // single y level

  ps.points = {cp(5, 0, 0), cp(5, 1, 1), cp(5, 2, 2), cp(5, 3, 3)};
  CHECK(!decide(ps).has_value());  // single x level

  ps.points = {cp(0, 0, 0), cp(1, 1, 1), cp(2, 2, 2), cp(3, 3, 3)};
  CHECK(!decide(ps).has_value());  // monotone staircase
}

TEST_CASE("decide equals the brute forces and the per-line composition") {
  SplitMix64 rng{31337};
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.below(22);
    const std::size_t k = 1 + rng.below(5);
    const auto ps = random_instance(rng, n, std::max<std::size_t>(k, 1), 5);
    const auto fast = decide(ps);
    const auto brute = oracle_centers(ps);
    CAPTURE(trial, serialize_instance(ps, FileFormat::csv));
    CHECK(fast.has_value() == brute.has_value());

    bool lines_found = false;
    for (const auto& lc : candidate_sweeps(ps))
      if (test_cross(lc.ne, lc.nw, lc.sw, lc.se, lc.line)) {
        lines_found = true;
        break;
      }
    CHECK(fast.has_value() == lines_found);

    if (fast) {
      ++yes;
      CHECK(verify_cross(*fast, ps));
    }
    if (brute) CHECK(verify_cross(*brute, ps));
  }
  CHECK(yes > 20);
}

TEST_CASE("decide handles stacked duplicate points") {
  PointSet ps;
  // duplicates, shared rows and columns around one workable cross
  ps.points = {cp(0, 3, 0), cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2),
               cp(3, 1, 3), cp(0, 4, 1),  cp(3, 0, 2), cp(0, 0, 5)};
  const auto cross = decide(ps);
  REQUIRE(cross.has_value());
  CHECK(verify_cross(*cross, ps));
}
