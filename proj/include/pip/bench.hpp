#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "pip/baselines.hpp"
#include "pip/fixtures.hpp"
#include "pip/geometry.hpp"

namespace pip {

inline constexpr char kBenchCsvHeader[] = "method,N,log10_N,T_us,log10_T_us";
inline constexpr std::size_t kBenchTrials = 10;

struct TimingReport {
  Method method = Method::DualPerspective;
  std::size_t n_vertices = 0;
  std::size_t z = 0;  // sweeps over the grid per trial
  std::size_t q = 0;  // grid lines per axis
  std::array<double, kBenchTrials> trial_seconds{};
  double t_per_query_us = 0.0;
};

// Mean time of one query in microseconds:
// sum(trials) / (trials * z * q^2) * 1e6.
double per_query_us(const std::array<double, kBenchTrials>& trial_seconds, std::size_t z,
                    std::size_t q);

// Ten timed trials; each trial classifies every grid point z times in one
// serial loop over a pre-built point buffer, results folded into a sink so
// the work cannot be elided. steady_clock around whole trials only.
TimingReport bench(const Polygon& poly, const GridSpec& spec, Method m, std::size_t z,
                   const DualConfig& cfg = {});

// One CSV row per (method, size): gears of roughly the target vertex counts
// (arc points rounded to hit 72 * arc_points), timed on a fixed 41 x 41 grid
// over [-5, 5]. Writes kBenchCsvHeader first.
void bench_suite(const std::vector<Method>& methods, const std::vector<std::size_t>& target_sizes,
                 std::size_t z, std::ostream& out);

}  // namespace pip
