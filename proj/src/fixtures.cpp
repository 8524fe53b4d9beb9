#include "pip/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pip {

GridSpec::GridSpec(double x_min_, double step_, std::size_t lines_)
    : x_min(x_min_), step(step_), lines(lines_) {
  if (!std::isfinite(x_min_) || !std::isfinite(step_) || !(step_ > 0.0))
    throw std::invalid_argument("grid spec needs finite x_min and positive step");
  if (lines_ < 1) throw std::invalid_argument("grid spec needs at least one line");
}

std::vector<Point2> grid_points(const GridSpec& spec) {
  std::vector<Point2> pts;
  pts.reserve(spec.point_count());
  for (std::size_t j = 0; j < spec.lines; ++j) {
    const double y = spec.coord(j);
    for (std::size_t i = 0; i < spec.lines; ++i) {
      pts.emplace_back(spec.coord(i), y);
    }
  }
  return pts;
}

GridSpec square_grid_spec() { return GridSpec(-5.0, 0.1, 101); }
GridSpec gear_grid_spec() { return GridSpec(-5.0, 0.05, 201); }
GridSpec gear_grid_spec_200() { return GridSpec(-5.0, 0.05, 200); }

Polygon square_fixture() {
  return Polygon({{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}});
}

Polygon lshape_fixture() {
  return Polygon({{0.0, 0.0}, {2.0, 0.0}, {2.0, 2.0}, {1.0, 2.0}, {1.0, 1.0}, {0.0, 1.0}});
}

Point2 polar_point(double r, double theta_degrees) {
  double a = std::fmod(theta_degrees, 360.0);
  if (a < 0.0) a += 360.0;
  // Exact directions on the axes and diagonals keep the radial walls there
  // perfectly collinear, so side scalars against them cancel to exactly zero.
  static const double kDiag = std::sqrt(0.5);
  if (a == 0.0) return Point2(r, 0.0);
  if (a == 45.0) return Point2(r * kDiag, r * kDiag);
  if (a == 90.0) return Point2(0.0, r);
  if (a == 135.0) return Point2(-(r * kDiag), r * kDiag);
  if (a == 180.0) return Point2(-r, 0.0);
  if (a == 225.0) return Point2(-(r * kDiag), -(r * kDiag));
  if (a == 270.0) return Point2(0.0, -r);
  if (a == 315.0) return Point2(r * kDiag, -(r * kDiag));
  const double rad = a * std::numbers::pi / 180.0;
  return Point2(r * std::cos(rad), r * std::sin(rad));
}

Polygon gear_fixture(const GearParams& params) {
  if (!(params.r_in > 0.0) || !(params.r_out > params.r_in))
    throw std::invalid_argument("gear needs 0 < r_in < r_out");
  if (params.arc_points < 2) throw std::invalid_argument("gear needs arc_points >= 2");
  const double sector = params.sector_degrees;
  const auto teeth = static_cast<std::size_t>(std::lround(360.0 / (2.0 * sector)));
  if (teeth < 1 || 2.0 * sector * static_cast<double>(teeth) != 360.0)
    throw std::invalid_argument("sector_degrees must evenly split the circle");

  const std::size_t m = params.arc_points;
  std::vector<Point2> verts;
  verts.reserve(teeth * 2 * m);
  for (std::size_t k = 0; k < teeth; ++k) {
    const double base = 2.0 * sector * static_cast<double>(k);
    for (std::size_t j = 0; j < m; ++j) {
      const double frac = static_cast<double>(j) / static_cast<double>(m - 1);
      verts.push_back(polar_point(params.r_out, base + sector * frac));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const double frac = static_cast<double>(j) / static_cast<double>(m - 1);
      verts.push_back(polar_point(params.r_in, base + sector + sector * frac));
    }
  }
  return Polygon(std::move(verts));
}

Polygon slender_fixture() {
  return Polygon({{0.0, 0.0},
                  {2.0, 0.0},
                  {2.0, 4.0},
                  {1.95, 4.0},
                  {1.95, 0.05},
                  {0.05, 0.05},
                  {0.05, 4.0},
                  {0.0, 4.0},
                  {0.0, 2.0}});
}

Point2 slender_trap_point() { return Point2(0.06, 2.0); }

Polygon random_simple_polygon(std::uint32_t seed, std::size_t n) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  struct IPoint {
    long long x;
    long long y;
  };
  for (std::uint32_t attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937 gen(attempt == 0 ? seed : seed * 1000003u + attempt);
    std::vector<IPoint> pts;
    int guard = 0;
    while (pts.size() < n && guard < 10000) {
      ++guard;
      const long long x = static_cast<long long>(gen() % 21u) - 10;
      const long long y = static_cast<long long>(gen() % 21u) - 10;
      const bool dup = std::any_of(pts.begin(), pts.end(),
                                   [&](const IPoint& q) { return q.x == x && q.y == y; });
      if (!dup) pts.push_back({x, y});
    }
    if (pts.size() < n) continue;

    long long sx = 0;
    long long sy = 0;
    for (const IPoint& q : pts) {
      sx += q.x;
      sy += q.y;
    }
    const auto nn = static_cast<long long>(n);
    // Angular sort about the centroid in exact integer arithmetic: compare
    // scaled offsets q = n*p - sum by half plane, then cross product, then
    // radius. Integer coordinates keep every comparison exact.
    const auto scaled = [&](const IPoint& q) {
      return IPoint{nn * q.x - sx, nn * q.y - sy};
    };
    std::sort(pts.begin(), pts.end(), [&](const IPoint& pa, const IPoint& pb) {
      const IPoint a = scaled(pa);
      const IPoint b = scaled(pb);
      const int ha = (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1;
      const int hb = (b.y > 0 || (b.y == 0 && b.x > 0)) ? 0 : 1;
      if (ha != hb) return ha < hb;
      const long long cr = a.x * b.y - a.y * b.x;
      if (cr != 0) return cr > 0;
      return a.x * a.x + a.y * a.y < b.x * b.x + b.y * b.y;
    });

    std::vector<Point2> verts;
    verts.reserve(n);
    for (const IPoint& q : pts)
      verts.emplace_back(static_cast<double>(q.x), static_cast<double>(q.y));
    Polygon poly{std::move(verts)};
    if (poly.signed_area() == 0.0) continue;
    if (!validate_simple(poly)) continue;
    return canonicalize_ccw(poly);
  }
  throw std::runtime_error("random_simple_polygon failed to converge");
}

Classification square_oracle(const Point2& p) {
  const double m = std::max(std::abs(p.x), std::abs(p.y));
  if (m < 1.0) return Classification::Inside;
  if (m == 1.0) return Classification::OnBoundary;
  return Classification::Outside;
}

Classification gear_oracle(const Point2& p, const GearParams& params) {
  const double r2 = p.x * p.x + p.y * p.y;
  const double in2 = params.r_in * params.r_in;
  const double out2 = params.r_out * params.r_out;

  // The eight snapped walls lie exactly on the axes and diagonals whenever the
  // sector width divides 45 degrees; membership there is a coordinate identity.
  if (std::fmod(45.0, params.sector_degrees) == 0.0) {
    if ((p.y == 0.0 || p.x == 0.0 || p.y == p.x || p.y == -p.x) && r2 >= in2 && r2 <= out2)
      return Classification::OnBoundary;
  }

  double a = std::atan2(p.y, p.x) * 180.0 / std::numbers::pi;
  if (a < 0.0) a += 360.0;
  const double sector = params.sector_degrees;
  const auto n_sec = static_cast<long long>(std::lround(360.0 / sector));
  auto sec = static_cast<long long>(std::floor(a / sector));
  if (sec < 0) sec = 0;
  if (sec >= n_sec) sec = n_sec - 1;

  // Within rounding distance of a snapped wall the computed angle cannot be
  // trusted to pick the sector, but the side of those eight carriers is exact
  // in the coordinates, so it decides instead.
  if (std::fmod(45.0, sector) == 0.0) {
    const double k45 = std::round(a / 45.0);
    if (std::fabs(a - 45.0 * k45) < 1e-6) {
      double side = 0.0;
      switch (static_cast<int>(k45) % 8) {
        case 0: side = p.y; break;
        case 1: side = p.y - p.x; break;
        case 2: side = -p.x; break;
        case 3: side = -p.x - p.y; break;
        case 4: side = -p.y; break;
        case 5: side = p.x - p.y; break;
        case 6: side = p.x; break;
        case 7: side = p.x + p.y; break;
      }
      // Exactly on a carrier and beyond the wall span: radius alone decides.
      if (side == 0.0) return r2 < in2 ? Classification::Inside : Classification::Outside;
      const long long at_line = std::llround(45.0 * k45 / sector);
      sec = side > 0.0 ? at_line : at_line - 1;
      sec = (sec % n_sec + n_sec) % n_sec;
    }
  }
  const bool tooth = (sec % 2 == 0);
  const double radius = tooth ? params.r_out : params.r_in;

  // The arc is a fan of chords; pick the chord under the query angle and test
  // which side of its carrier the point is on.
  const std::size_t m = params.arc_points;
  const double substep = sector / static_cast<double>(m - 1);
  const double local = a - sector * static_cast<double>(sec);
  auto j = static_cast<long long>(std::floor(local / substep));
  if (j < 0) j = 0;
  if (j > static_cast<long long>(m) - 2) j = static_cast<long long>(m) - 2;
  const double mid = sector * static_cast<double>(sec) + substep * (static_cast<double>(j) + 0.5);
  const double mid_rad = mid * std::numbers::pi / 180.0;
  const double half_rad = 0.5 * substep * std::numbers::pi / 180.0;
  const double proj = p.x * std::cos(mid_rad) + p.y * std::sin(mid_rad);
  const double chord = radius * std::cos(half_rad);
  if (proj < chord) return Classification::Inside;
  if (proj > chord) return Classification::Outside;
  return Classification::OnBoundary;
}

}  // namespace pip
