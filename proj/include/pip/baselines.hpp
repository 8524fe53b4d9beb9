#pragma once

#include <optional>
#include <string_view>

#include "pip/dual.hpp"
#include "pip/geometry.hpp"

namespace pip {

enum class Method {
  DualPerspective,
  RayCasting,
  AngleSum,
  SumOfAreas,
  HA6,
  HA7,
  ModifiedPolygon,
};

std::string_view method_name(Method m);  // dual, ray, angles, areas, ha6, ha7, modified
std::optional<Method> method_from_name(std::string_view name);

// Half-open crossing rule: an edge a->b counts when (a.y < p.y) != (b.y < p.y)
// and the crossing lies strictly right of p. Every edge is first checked for
// containment of p, so boundary points never reach the parity count.
Classification ray_casting(const Polygon& poly, const Point2& p);

struct WindingResult {
  double w = 0.0;  // signed turns of the ring around p
  Classification result = Classification::Outside;
};

// Accumulates atan2 turn angles. A zero edge-endpoint vector or an exact
// half-turn edge means p is on the boundary; otherwise |w| > 0.5 means inside.
WindingResult angle_sum(const Polygon& poly, const Point2& p);

// Convex counterclockwise rings only: every corner scalar >= 0.
bool is_convex(const Polygon& poly);

// Sum of the unsigned triangle areas (p, v_i, v_{i+1}).
double triangle_area_sum(const Polygon& poly, const Point2& p);

// Compares triangle_area_sum with the ring area, relative tolerance 1e-9.
// A zero-area triangle whose edge span contains p reports OnBoundary.
// Throws std::domain_error unless is_convex(poly).
Classification sum_of_areas(const Polygon& poly, const Point2& p);

// Winding number by crossing sign tests; no boundary detection, so boundary
// points get an arbitrary side.
Classification ha6(const Polygon& poly, const Point2& p);

// ha6 plus exact boundary detection: vertex hits, horizontal edges through p,
// and zero determinants inside crossing tests all report OnBoundary.
Classification ha7(const Polygon& poly, const Point2& p);

// Inserts p into the nearer parent segment of its nearest vertex (ties to the
// outgoing edge) and compares |area| before and after. |delta| within
// 1e-12 * |area| reports OnBoundary; growth reports Outside.
Classification modified_polygon(const Polygon& poly, const Point2& p);

Classification classify_point(const Polygon& poly, const Point2& p, Method m,
                              const DualConfig& cfg = {});

}  // namespace pip
