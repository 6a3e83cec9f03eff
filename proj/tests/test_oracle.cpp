#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace fourcross;
using namespace testsupport;

namespace {

ColoredPoint cp(long long x, long long y, ColorId c) {
  return ColoredPoint{Rational(x), Rational(y), c};
}

}  // namespace

TEST_CASE("both oracles find the spread cross and verify") {
  PointSet ps;
  ps.points = {cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2), cp(3, 1, 3)};
  const auto by_centers = oracle_centers(ps);
  const auto by_subsets = oracle_subsets(ps);
  REQUIRE(by_centers.has_value());
  REQUIRE(by_subsets.has_value());
  CHECK(verify_cross(*by_centers, ps));
  CHECK(verify_cross(*by_subsets, ps));
}

TEST_CASE("both oracles reject hopeless inputs") {
  PointSet ps;
  CHECK(!oracle_centers(ps).has_value());
  CHECK(!oracle_subsets(ps).has_value());

  ps.points = {cp(0, 0, 0)};
  CHECK(!oracle_centers(ps).has_value());
  CHECK(!oracle_subsets(ps).has_value());

  ps.points = {cp(0, 0, 0), cp(1, 1, 1), cp(2, 2, 2), cp(3, 3, 3)};  // staircase
  CHECK(!oracle_centers(ps).has_value());
  CHECK(!oracle_subsets(ps).has_value());

  ps.points = {cp(0, 3, 0), cp(2, 4, 1), cp(1, 0, 2), cp(3, 1, 2)};  // three colors
  CHECK(!oracle_centers(ps).has_value());
  CHECK(!oracle_subsets(ps).has_value());
}

TEST_CASE("oracles handle duplicated and axis-sharing points") {
  PointSet ps;
  ps.points = {cp(0, 3, 0), cp(0, 3, 0), cp(0, 3, 1), cp(2, 4, 1),
               cp(1, 0, 2), cp(3, 1, 3), cp(1, 4, 3), cp(3, 0, 0)};
  const auto by_centers = oracle_centers(ps);
  const auto by_subsets = oracle_subsets(ps);
  REQUIRE(by_centers.has_value());
  REQUIRE(by_subsets.has_value());
  CHECK(verify_cross(*by_centers, ps));
  CHECK(verify_cross(*by_subsets, ps));
}

TEST_CASE("the two oracles agree on random small instances") {
  SplitMix64 rng{808};
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.below(12);
    const std::size_t k = 1 + rng.below(5);
    const auto ps = random_instance(rng, n, k, 4);
    const auto a = oracle_centers(ps);
    const auto b = oracle_subsets(ps);
    CAPTURE(trial, serialize_instance(ps, FileFormat::csv));
    CHECK(a.has_value() == b.has_value());
    if (a) {
      ++yes;
      CHECK(verify_cross(*a, ps));
      CHECK(verify_cross(*b, ps));
    }
  }
  CHECK(yes > 10);
}

TEST_CASE("per-color extremes pick the strongest point of each color") {
  PointSet ps;
  ps.points = {cp(0, 2, 0), cp(5, 2, 0), cp(3, 2, 1),
               cp(-3, 0, 0), cp(2, 0, 2), cp(2, -5, 2)};
  const IntermediateLine line{Rational(2), Rational(0), 0};

  const auto above_east = per_color_extremes(ps, line, LineSide::above, ExtremeDir::east);
  REQUIRE(above_east.size() == 2);
  CHECK(above_east[0].color == 0);
  CHECK(above_east[0].x == Rational(5));
  CHECK(above_east[1].color == 1);
  CHECK(above_east[1].x == Rational(3));

  const auto above_west = per_color_extremes(ps, line, LineSide::above, ExtremeDir::west);
  REQUIRE(above_west.size() == 2);
  CHECK(above_west[0].color == 0);
  CHECK(above_west[0].x == Rational(0));

  const auto below_east = per_color_extremes(ps, line, LineSide::below, ExtremeDir::east);
  REQUIRE(below_east.size() == 2);
  CHECK(below_east[0].color == 2);
  CHECK(below_east[0].x == Rational(2));
  CHECK(below_east[1].color == 0);
  CHECK(below_east[1].x == Rational(-3));

  const auto below_west = per_color_extremes(ps, line, LineSide::below, ExtremeDir::west);
  REQUIRE(below_west.size() == 2);
  CHECK(below_west[0].color == 0);
  CHECK(below_west[0].x == Rational(-3));
}

TEST_CASE("per-color extremes break x ties by color id") {
  PointSet ps;
  ps.points = {cp(5, 2, 3), cp(5, 2, 1), cp(5, 2, 2)};
  const IntermediateLine line{Rational(2), Rational(0), 0};
  const auto ext = per_color_extremes(ps, line, LineSide::above, ExtremeDir::east);
  REQUIRE(ext.size() == 3);
  CHECK(ext[0].color == 1);
  CHECK(ext[1].color == 2);
  CHECK(ext[2].color == 3);
}

TEST_CASE("candidate_set_oracle truncates to the best four colors") {
  PointSet ps;
  for (ColorId c = 0; c < 6; ++c)
    ps.points.push_back(cp(static_cast<long long>(10 - c), 2, c));
  const IntermediateLine line{Rational(2), Rational(0), 0};
  const auto ref = candidate_set_oracle(ps, line, LineSide::above, ExtremeDir::east);
  REQUIRE(ref.size() == 4);
  CHECK(ref[0].x == Rational(10));
  CHECK(ref[3].x == Rational(7));
}

TEST_CASE("characterization check accepts the truth and rejects fakes") {
  const auto mk = [](std::vector<ColoredPoint> pts, ExtremeDir dir) {
    return CandidateSet(dir, pts);
  };
  std::vector<ColorExtreme> extremes = {{0, Rational(9)}, {1, Rational(8)},
                                        {2, Rational(7)}, {3, Rational(6)},
                                        {4, Rational(5)}};

  SECTION("the canonical top four pass") {
    const auto cs = mk({cp(9, 0, 0), cp(8, 0, 1), cp(7, 0, 2), cp(6, 0, 3)}, ExtremeDir::east);
    CHECK(matches_characterization(cs, extremes));
  }
  SECTION("dropping a stronger color for a weaker one fails") {
    const auto cs = mk({cp(9, 0, 0), cp(8, 0, 1), cp(7, 0, 2), cp(5, 0, 4)}, ExtremeDir::east);
    CHECK(!matches_characterization(cs, extremes));
  }
  SECTION("an entry below its color's extreme fails") {
    const auto cs = mk({cp(4, 0, 0), cp(8, 0, 1), cp(7, 0, 2), cp(6, 0, 3)}, ExtremeDir::east);
    CHECK(!matches_characterization(cs, extremes));
  }
  SECTION("an undersized set fails") {
    const auto cs = mk({cp(9, 0, 0), cp(8, 0, 1), cp(7, 0, 2)}, ExtremeDir::east);
    CHECK(!matches_characterization(cs, extremes));
  }
  SECTION("ties between kept and dropped colors are acceptable") {
    std::vector<ColorExtreme> tied = {{0, Rational(9)}, {1, Rational(8)},
                                      {2, Rational(8)}, {3, Rational(6)},
                                      {4, Rational(6)}};
    const auto cs = mk({cp(9, 0, 0), cp(8, 0, 1), cp(8, 0, 2), cp(6, 0, 3)}, ExtremeDir::east);
    CHECK(matches_characterization(cs, tied));
    const auto cs2 = mk({cp(9, 0, 0), cp(8, 0, 1), cp(8, 0, 2), cp(6, 0, 4)}, ExtremeDir::east);
    CHECK(matches_characterization(cs2, tied));
  }
}

TEST_CASE("oracles agree with decide when coordinates repeat heavily") {
  SplitMix64 rng{4242};
  for (int trial = 0; trial < 200; ++trial) {
    PointSet ps;
    const std::size_t n = rng.below(10);
    for (std::size_t i = 0; i < n; ++i)
      ps.points.push_back(cp(static_cast<long long>(rng.below(2)),
                             static_cast<long long>(rng.below(2)),
                             static_cast<ColorId>(rng.below(4))));
    const auto a = oracle_centers(ps);
    const auto b = oracle_subsets(ps);
    const auto d = decide(ps);
    CAPTURE(trial, serialize_instance(ps, FileFormat::csv));
    CHECK(a.has_value() == b.has_value());
    CHECK(a.has_value() == d.has_value());
  }
}
