#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pip/baselines.hpp"
#include "pip/fixtures.hpp"
#include "pip/geometry.hpp"

namespace pip {

// Classification labels over a square grid, row-major with x varying fastest
// (same layout as grid_points).
struct Mask {
  std::size_t q = 0;
  std::vector<Classification> labels;
};

enum class MaskFormat { Csv, Pgm };

// Parallelized over grid points when OpenMP is available; threads = 0 keeps
// the runtime default. Labels are identical to classify_grid_serial.
Mask classify_grid(const Polygon& poly, const GridSpec& spec, Method m,
                   const DualConfig& cfg = {}, int threads = 0);

// Serial reference implementation.
Mask classify_grid_serial(const Polygon& poly, const GridSpec& spec, Method m,
                          const DualConfig& cfg = {});

// Csv: one row per grid line, comma-separated labels 0 = Outside, 1 = Inside,
// 2 = OnBoundary. Pgm: plain P2, maxval 255, 255 = Outside, 128 = Inside,
// 0 = OnBoundary. Both write row 0 first.
void write_mask(std::ostream& out, const Mask& mask, MaskFormat format);
Mask read_mask(std::istream& in);  // autodetects the P2 header

void save_mask(const std::string& path, const Mask& mask, MaskFormat format);
Mask load_mask(const std::string& path);

}  // namespace pip
