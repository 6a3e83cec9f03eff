// Scaling measurements over the generator families. Times are wall clock
// medians; one warmup run per size is discarded so allocator and cache
// warmup never lands in the first sample.
#pragma once

#include "fourcross/decide.hpp"
#include "fourcross/generate.hpp"
#include "fourcross/oracle.hpp"
#include "fourcross/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourcross {

enum class BenchAlgo { decide, oracle_centers, oracle_subsets, reduce_chain };

inline std::string_view to_string(BenchAlgo a) {
  switch (a) {
    case BenchAlgo::decide: return "decide";
    case BenchAlgo::oracle_centers: return "oracle_centers";
    case BenchAlgo::oracle_subsets: return "oracle_subsets";
    case BenchAlgo::reduce_chain: return "reduce";
  }
  return "?";
}

inline std::optional<BenchAlgo> parse_bench_algo(std::string_view s) {
  for (BenchAlgo a : {BenchAlgo::decide, BenchAlgo::oracle_centers, BenchAlgo::oracle_subsets,
                      BenchAlgo::reduce_chain})
    if (s == to_string(a)) return a;
  return std::nullopt;
}

struct BenchRow {
  std::string family;
  std::size_t n = 0;          // generator size parameter
  int reps = 0;
  std::uint64_t median_ns = 0;
  double ns_per_nlogn = 0.0;  // median_ns / (n log2 n)
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::string to_csv() const {
    std::ostringstream os;
    os << "family,n,reps,median_ns,ns_per_nlogn\n";
    for (const auto& r : rows) {
      os << r.family << ',' << r.n << ',' << r.reps << ',' << r.median_ns << ',';
      os.setf(std::ios::fixed);
      os.precision(3);
      os << r.ns_per_nlogn << '\n';
      os.unsetf(std::ios::fixed);
    }
    return os.str();
  }

  // Growth factors between consecutive sizes of one family, in row order.
  std::vector<double> doubling_ratios(std::string_view family) const {
    std::vector<double> ratios;
    const BenchRow* prev = nullptr;
    for (const auto& r : rows) {
      if (r.family != family) continue;
      if (prev && prev->median_ns > 0)
        ratios.push_back(static_cast<double>(r.median_ns) /
                         static_cast<double>(prev->median_ns));
      prev = &r;
    }
    return ratios;
  }

  // Median of the per step ratios; robust against one noisy step.
  double median_ratio(std::string_view family) const {
    auto ratios = doubling_ratios(family);
    if (ratios.empty()) return 0.0;
    std::sort(ratios.begin(), ratios.end());
    const std::size_t m = ratios.size();
    return m % 2 ? ratios[m / 2] : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
  }
};

struct ScalingOptions {
  std::vector<GenKind> families = {GenKind::uniform};
  std::size_t min_n = 1u << 10;
  std::size_t max_n = 1u << 16;
  int reps = 5;
  BenchAlgo algo = BenchAlgo::decide;
  std::size_t k = 8;
  std::uint64_t seed = 1;
};

namespace detail {

// Keeps results observable so the timed call cannot be optimized away.
inline volatile std::uint64_t bench_sink = 0;

inline void consume(const std::optional<Cross>& result) {
  std::uint64_t acc = result.has_value() ? 1 : 0;
  if (result)
    for (const auto& w : result->witness) acc = acc * 31 + w.color;
  bench_sink = bench_sink + acc;
}

template <typename F>
std::uint64_t time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

inline std::uint64_t median_of(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size();
  return m % 2 ? xs[m / 2] : (xs[m / 2 - 1] + xs[m / 2]) / 2;
}

}  // namespace detail

// Runs algo on each family at n = min_n, 2 min_n, ..., up to max_n. The
// coug_chain family feeds the timed algorithm through the full gap-to-cross
// construction; the construction itself is timed only under algo "reduce",
// which the other families do not support.
inline BenchReport run_scaling(const ScalingOptions& opt) {
  if (opt.reps < 1) throw std::invalid_argument("run_scaling: reps must be >= 1");
  if (opt.min_n < 1 || opt.min_n > opt.max_n)
    throw std::invalid_argument("run_scaling: need 1 <= min_n <= max_n");
  BenchReport report;
  for (GenKind kind : opt.families) {
    if (opt.algo == BenchAlgo::reduce_chain && kind != GenKind::coug_chain)
      throw std::invalid_argument("run_scaling: algo \"reduce\" needs the coug_chain family");
    for (std::size_t n = opt.min_n; n <= opt.max_n; n *= 2) {
      GenSpec spec;
      spec.kind = kind;
      spec.n = n;
      spec.k = std::min(opt.k, std::max<std::size_t>(n, 1));
      if (kind == GenKind::planted) spec.k = 4;
      spec.seed = mix64(mix64(opt.seed, static_cast<std::uint64_t>(kind)), n);

      std::function<void()> run;
      CougInstance coug;
      PointSet points;
      if (kind == GenKind::coug_chain) {
        coug = generate_coug(spec);
        if (opt.algo == BenchAlgo::reduce_chain) {
          run = [&] {
            auto built = reduce_cns_to_4cc(reduce_coug_to_cns(coug));
            detail::bench_sink = detail::bench_sink + built.points.size();
          };
        } else {
          points = reduce_cns_to_4cc(reduce_coug_to_cns(coug));
        }
      } else {
        points = generate_points(spec);
      }
      if (!run) {
        switch (opt.algo) {
          case BenchAlgo::decide:
            run = [&] { detail::consume(decide(points)); };
            break;
          case BenchAlgo::oracle_centers:
            run = [&] { detail::consume(oracle_centers(points)); };
            break;
          case BenchAlgo::oracle_subsets:
            run = [&] { detail::consume(oracle_subsets(points)); };
            break;
          case BenchAlgo::reduce_chain:
            break;
        }
      }

      run();  // warmup, discarded
      std::vector<std::uint64_t> samples;
      samples.reserve(static_cast<std::size_t>(opt.reps));
      for (int r = 0; r < opt.reps; ++r) samples.push_back(detail::time_ns(run));

      BenchRow row;
      row.family = std::string(to_string(kind));
      row.n = n;
      row.reps = opt.reps;
      row.median_ns = detail::median_of(std::move(samples));
      const double nn = static_cast<double>(n);
      row.ns_per_nlogn =
          n >= 2 ? static_cast<double>(row.median_ns) / (nn * std::log2(nn)) : 0.0;
      report.rows.push_back(std::move(row));
      if (n > opt.max_n / 2) break;  // next doubling would overshoot
    }
  }
  return report;
}

}  // namespace fourcross
