#include "pip/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace pip {

namespace {

volatile int g_sink = 0;  // keeps the optimizer from dropping timed work

}  // namespace

double per_query_us(const std::array<double, kBenchTrials>& trial_seconds, std::size_t z,
                    std::size_t q) {
  if (z < 1 || q < 1) throw std::invalid_argument("per_query_us needs z >= 1 and q >= 1");
  double total = 0.0;
  for (const double t : trial_seconds) total += t;
  const double queries = static_cast<double>(kBenchTrials) * static_cast<double>(z) *
                         static_cast<double>(q) * static_cast<double>(q);
  return total / queries * 1e6;
}

TimingReport bench(const Polygon& poly, const GridSpec& spec, Method m, std::size_t z,
                   const DualConfig& cfg) {
  if (z < 1) throw std::invalid_argument("bench needs z >= 1");
  TimingReport rep;
  rep.method = m;
  rep.n_vertices = poly.size();
  rep.z = z;
  rep.q = spec.lines;

  const std::vector<Point2> pts = grid_points(spec);
  for (std::size_t trial = 0; trial < kBenchTrials; ++trial) {
    int sink = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t sweep = 0; sweep < z; ++sweep) {
      for (const Point2& p : pts) sink += static_cast<int>(classify_point(poly, p, m, cfg));
    }
    const auto t1 = std::chrono::steady_clock::now();
    g_sink = g_sink + sink;
    rep.trial_seconds[trial] = std::chrono::duration<double>(t1 - t0).count();
  }
  rep.t_per_query_us = per_query_us(rep.trial_seconds, z, spec.lines);
  return rep;
}

void bench_suite(const std::vector<Method>& methods, const std::vector<std::size_t>& target_sizes,
                 std::size_t z, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  out << std::setprecision(12);
  const GridSpec spec(-5.0, 0.25, 41);
  for (const Method m : methods) {
    for (const std::size_t target : target_sizes) {
      const std::size_t arc = std::max<std::size_t>(2, (target + 36) / 72);
      GearParams params;
      params.arc_points = arc;
      const Polygon gear = gear_fixture(params);
      const TimingReport rep = bench(gear, spec, m, z);
      const auto n = static_cast<double>(gear.size());
      out << method_name(m) << ',' << gear.size() << ',' << std::log10(n) << ','
          << rep.t_per_query_us << ',' << std::log10(rep.t_per_query_us) << '\n';
    }
  }
}

}  // namespace pip
