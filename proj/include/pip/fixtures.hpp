#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pip/geometry.hpp"

namespace pip {

// Square axis-aligned sampling grid: lines x lines points, spacing step,
// lower-left corner (x_min, x_min). step must be positive and finite,
// lines >= 1.
struct GridSpec {
  double x_min = 0.0;
  double step = 1.0;
  std::size_t lines = 1;

  GridSpec(double x_min_, double step_, std::size_t lines_);

  double coord(std::size_t i) const { return x_min + step * static_cast<double>(i); }
  std::size_t point_count() const { return lines * lines; }
};

// Row-major, x varies fastest: index j * lines + i maps to
// (coord(i), coord(j)).
std::vector<Point2> grid_points(const GridSpec& spec);

GridSpec square_grid_spec();    // (-5, 0.1, 101)
GridSpec gear_grid_spec();      // (-5, 0.05, 201)
GridSpec gear_grid_spec_200();  // (-5, 0.05, 200)

// 2x2 counterclockwise square centered at the origin:
// (-1,-1), (1,-1), (1,1), (-1,1).
Polygon square_fixture();

// (0,0), (2,0), (2,2), (1,2), (1,1), (0,1); one reflex vertex at (1,1).
Polygon lshape_fixture();

struct GearParams {
  double r_in = 1.0;
  double r_out = 4.0;
  double sector_degrees = 5.0;  // arc span of one tooth top and of one gap
  std::size_t arc_points = 2;   // vertices per arc, >= 2
};

// 36-tooth gear ring: alternating outer arcs (radius r_out) and inner arcs
// (radius r_in), each spanning sector_degrees and sampled with arc_points
// vertices; the radial walls between them are the implicit joining edges.
// Counterclockwise, 72 * arc_points vertices. Vertices at multiples of 45
// degrees are snapped so the eight walls there lie exactly on the axes and
// diagonals.
Polygon gear_fixture(const GearParams& params = {});

// (r, theta in degrees) -> Cartesian, with multiples of 45 degrees snapped to
// exact axis and diagonal coordinates (diagonals use r * sqrt(0.5)).
Point2 polar_point(double r, double theta_degrees);

// Slender U ring, limb thickness 0.05; the outer left wall carries a collinear
// mid vertex at (0,2), the kind a re-discretized boundary produces.
Polygon slender_fixture();

// (0.06, 2): lies in the notch, outside the material, but its nearest vertex
// is (0,2) across the left limb. Naive dual classification calls it Inside;
// the slender check repairs it.
Point2 slender_trap_point();

// n distinct integer-grid vertices in [-10,10]^2, angularly sorted about the
// centroid (exact integer comparator), rejection-sampled until simple with
// nonzero area, then made counterclockwise. Deterministic for a given
// (seed, n).
Polygon random_simple_polygon(std::uint32_t seed, std::size_t n);

// Ground truth for square_fixture: max(|x|, |y|) against 1.
Classification square_oracle(const Point2& p);

// Analytic ground truth for gear_fixture. Exact on the sampling grids above:
// points on the eight snapped walls are caught by coordinate identities, and
// every other grid point clears the chord-vs-arc shell by a safe margin.
Classification gear_oracle(const Point2& p, const GearParams& params = {});

}  // namespace pip
