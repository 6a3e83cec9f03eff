// Seeded, platform-independent instance generators for tests and benchmarks.
#pragma once

#include "fourcross/geometry.hpp"
#include "fourcross/reductions.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourcross {

// SplitMix64: fixed 64-bit generator, bit-identical across platforms.
// Streams are split per index via mix64 so generation order never matters.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound]; modulo mapping, fine for test instances.
  std::uint64_t below(std::uint64_t bound_inclusive) {
    return next() % (bound_inclusive + 1);
  }
};

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  SplitMix64 rng{a ^ (0x9E3779B97F4A7C15ull + (b << 6) + (b >> 2))};
  rng.next();
  return rng.next() ^ b;
}

enum class GenKind { uniform, grid, monotone, planted, coug_chain };

inline std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::uniform: return "uniform";
    case GenKind::grid: return "grid";
    case GenKind::monotone: return "monotone";
    case GenKind::planted: return "planted";
    case GenKind::coug_chain: return "coug_chain";
  }
  return "?";
}

inline std::optional<GenKind> parse_gen_kind(std::string_view s) {
  for (GenKind k : {GenKind::uniform, GenKind::grid, GenKind::monotone, GenKind::planted,
                    GenKind::coug_chain})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

// Identical GenSpec implies bit-identical output.
struct GenSpec {
  GenKind kind = GenKind::uniform;
  std::size_t n = 0;
  std::size_t k = 1;               // color count where applicable
  std::uint64_t seed = 0;
  std::int64_t bbox = 1'000'000;   // coordinates drawn from [0, bbox]
};

namespace detail {

inline void validate_spec(const GenSpec& spec) {
  if (spec.kind != GenKind::coug_chain &&
      (spec.k < 1 || spec.k > std::max<std::size_t>(spec.n, 1)))
    throw std::invalid_argument("GenSpec: need 1 <= k <= max(n, 1)");
  if (spec.bbox < 0) throw std::invalid_argument("GenSpec: bbox must be >= 0");
  if (spec.kind == GenKind::planted) {
    if (spec.n < 4) throw std::invalid_argument("GenSpec: planted needs n >= 4");
    if (spec.k != 4) throw std::invalid_argument("GenSpec: planted needs k == 4");
    if (spec.bbox < 1) throw std::invalid_argument("GenSpec: planted needs bbox >= 1");
  }
  if (spec.kind == GenKind::coug_chain && spec.n < 1)
    throw std::invalid_argument("GenSpec: coug_chain needs n >= 1");
}

inline Rational coord(std::uint64_t v) { return Rational(static_cast<long long>(v)); }

}  // namespace detail

// Point families. uniform: i.i.d. integer points in the box. grid: points on
// a ceil(sqrt(n))-by-ceil(sqrt(n)) integer grid, forcing massive coordinate
// repetition. monotone: a strictly increasing staircase, colored round-robin
// over k; a NO instance for any k, since no center can have both its NW and
// SE open quadrants hit. planted: four differently colored points, one per
// open quadrant of a hidden center, plus noise reusing those colors; adding
// points never removes a cross, so this is a YES instance.
inline PointSet generate_points(const GenSpec& spec) {
  detail::validate_spec(spec);
  PointSet out;
  out.points.reserve(spec.n);
  const std::uint64_t box = static_cast<std::uint64_t>(spec.bbox);

  switch (spec.kind) {
    case GenKind::uniform: {
      for (std::size_t i = 0; i < spec.n; ++i) {
        SplitMix64 rng{mix64(spec.seed, i)};
        ColoredPoint p;
        p.x = detail::coord(rng.below(box));
        p.y = detail::coord(rng.below(box));
        p.color = static_cast<ColorId>(rng.below(spec.k - 1));
        out.points.push_back(std::move(p));
      }
      return out;
    }
    case GenKind::grid: {
      const auto side = static_cast<std::uint64_t>(
          std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(spec.n, 1)))));
      for (std::size_t i = 0; i < spec.n; ++i) {
        SplitMix64 rng{mix64(spec.seed, i)};
        ColoredPoint p;
        p.x = detail::coord(rng.below(side - 1));
        p.y = detail::coord(rng.below(side - 1));
        p.color = static_cast<ColorId>(rng.below(spec.k - 1));
        out.points.push_back(std::move(p));
      }
      return out;
    }
    case GenKind::monotone: {
      SplitMix64 rng{mix64(spec.seed, 0x6d6f6e6f)};
      long long x = 0;
      long long y = 0;
      for (std::size_t i = 0; i < spec.n; ++i) {
        x += 1 + static_cast<long long>(rng.below(2));
        y += 1 + static_cast<long long>(rng.below(2));
        out.points.push_back(
            ColoredPoint{Rational(x), Rational(y), static_cast<ColorId>(i % spec.k)});
      }
      return out;
    }
    case GenKind::planted: {
      SplitMix64 rng{mix64(spec.seed, 0x706c616e)};
      // Integer points east of the split have x > split_x + 1/2 > x of any
      // point west of it; same for y, so the four witnesses land strictly
      // inside the four open quadrants of the hidden center.
      const std::uint64_t split_x = rng.below(box - 1);
      const std::uint64_t split_y = rng.below(box - 1);
      const auto west = [&](SplitMix64& r) { return detail::coord(r.below(split_x)); };
      const auto east = [&](SplitMix64& r) {
        return detail::coord(split_x + 1 + r.below(box - split_x - 1));
      };
      const auto south = [&](SplitMix64& r) { return detail::coord(r.below(split_y)); };
      const auto north = [&](SplitMix64& r) {
        return detail::coord(split_y + 1 + r.below(box - split_y - 1));
      };
      out.points.push_back(ColoredPoint{east(rng), north(rng), 0});
      out.points.push_back(ColoredPoint{west(rng), north(rng), 1});
      out.points.push_back(ColoredPoint{west(rng), south(rng), 2});
      out.points.push_back(ColoredPoint{east(rng), south(rng), 3});
      for (std::size_t i = 4; i < spec.n; ++i) {
        SplitMix64 noise{mix64(spec.seed, i)};
        out.points.push_back(ColoredPoint{detail::coord(noise.below(box)),
                                          detail::coord(noise.below(box)),
                                          static_cast<ColorId>(noise.below(3))});
      }
      return out;
    }
    case GenKind::coug_chain:
      throw std::invalid_argument("generate_points: coug_chain produces a gap instance");
  }
  throw std::invalid_argument("generate_points: unknown kind");
}

// Adversarial gap instance: a shuffle of the odd integers 1..2n-1 against a
// shuffle of the even integers 2..2n. Every cross-pair distance is a
// positive integer, so the answer is NO and nothing can exit early anywhere
// along the reduction chain.
inline CougInstance generate_coug(const GenSpec& spec) {
  detail::validate_spec(spec);
  if (spec.kind != GenKind::coug_chain)
    throw std::invalid_argument("generate_coug: spec.kind must be coug_chain");
  CougInstance inst;
  inst.xs.reserve(spec.n);
  inst.ys.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    inst.xs.push_back(Rational(static_cast<long long>(2 * i + 1)));
    inst.ys.push_back(Rational(static_cast<long long>(2 * i + 2)));
  }
  SplitMix64 rng{mix64(spec.seed, 0x636f7567)};
  for (std::size_t i = spec.n; i-- > 1;) {
    std::swap(inst.xs[i], inst.xs[rng.below(i)]);
    std::swap(inst.ys[i], inst.ys[rng.below(i)]);
  }
  return inst;
}

}  // namespace fourcross
