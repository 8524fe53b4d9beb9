#include "pip/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pip {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::DualPerspective: return "dual";
    case Method::RayCasting: return "ray";
    case Method::AngleSum: return "angles";
    case Method::SumOfAreas: return "areas";
    case Method::HA6: return "ha6";
    case Method::HA7: return "ha7";
    case Method::ModifiedPolygon: return "modified";
  }
  return "dual";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "dual") return Method::DualPerspective;
  if (name == "ray") return Method::RayCasting;
  if (name == "angles") return Method::AngleSum;
  if (name == "areas") return Method::SumOfAreas;
  if (name == "ha6") return Method::HA6;
  if (name == "ha7") return Method::HA7;
  if (name == "modified") return Method::ModifiedPolygon;
  return std::nullopt;
}

Classification ray_casting(const Polygon& poly, const Point2& p) {
  const std::size_t n = poly.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Edge e = poly.edge(j);
    if (point_on_segment(p, e.from, e.to)) return Classification::OnBoundary;
  }
  std::size_t crossings = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Edge e = poly.edge(j);
    const Point2& a = e.from;
    const Point2& b = e.to;
    if ((a.y < p.y) == (b.y < p.y)) continue;
    const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (x_cross > p.x) ++crossings;
  }
  return (crossings % 2 == 1) ? Classification::Inside : Classification::Outside;
}

WindingResult angle_sum(const Polygon& poly, const Point2& p) {
  WindingResult r;
  double total = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Edge e = poly.edge(j);
    const Vector2 u = sub(e.from, p);
    const Vector2 v = sub(e.to, p);
    if ((u.dx == 0.0 && u.dy == 0.0) || (v.dx == 0.0 && v.dy == 0.0)) {
      r.result = Classification::OnBoundary;  // p coincides with a vertex
      return r;
    }
    const double cross = cross_z(u, v);
    const double d = dot(u, v);
    if (cross == 0.0 && d < 0.0) {
      r.result = Classification::OnBoundary;  // p between the endpoints, half turn
      return r;
    }
    total += std::atan2(cross, d);
  }
  r.w = total / (2.0 * std::numbers::pi);
  r.result = std::abs(r.w) > 0.5 ? Classification::Inside : Classification::Outside;
  return r;
}

bool is_convex(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prv = poly.vertex(poly.prev_index(i));
    const Point2& v = poly.vertex(i);
    const Point2& nxt = poly.vertex(poly.next_index(i));
    const double c = cross_z(sub(nxt, v), sub(prv, v));
    if (c < 0.0) return false;
  }
  return true;
}

double triangle_area_sum(const Polygon& poly, const Point2& p) {
  double total = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector2 u = sub(poly.vertex(i), p);
    const Vector2 v = sub(poly.vertex(poly.next_index(i)), p);
    total += 0.5 * std::abs(cross_z(u, v));
  }
  return total;
}

Classification sum_of_areas(const Polygon& poly, const Point2& p) {
  if (!is_convex(poly)) throw std::domain_error("sum_of_areas needs a convex ccw polygon");
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly.vertex(i);
    const Point2& b = poly.vertex(poly.next_index(i));
    const double cross = cross_z(sub(a, p), sub(b, p));
    if (cross == 0.0 && point_on_segment(p, a, b)) return Classification::OnBoundary;
  }
  const double area = std::abs(poly.signed_area());
  const double total = triangle_area_sum(poly, p);
  return total <= area * (1.0 + 1e-9) ? Classification::Inside : Classification::Outside;
}

namespace {

double det_around(const Point2& p, const Point2& a, const Point2& b) {
  return (a.x - p.x) * (b.y - p.y) - (a.y - p.y) * (b.x - p.x);
}

}  // namespace

Classification ha6(const Polygon& poly, const Point2& p) {
  int w = 0;
  const std::size_t n = poly.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Edge e = poly.edge(j);
    const Point2& a = e.from;
    const Point2& b = e.to;
    if ((a.y < p.y) == (b.y < p.y)) continue;
    const int dir = (b.y > a.y) ? 1 : -1;
    if (a.x >= p.x) {
      if (b.x > p.x) {
        w += dir;
      } else if ((det_around(p, a, b) > 0.0) == (b.y > a.y)) {
        w += dir;  // crossing right of p decided by the determinant
      }
    } else if (b.x > p.x) {
      if ((det_around(p, a, b) > 0.0) == (b.y > a.y)) w += dir;
    }
  }
  return w != 0 ? Classification::Inside : Classification::Outside;
}

Classification ha7(const Polygon& poly, const Point2& p) {
  int w = 0;
  const std::size_t n = poly.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Edge e = poly.edge(j);
    const Point2& a = e.from;
    const Point2& b = e.to;
    if (b.x == p.x && b.y == p.y) return Classification::OnBoundary;
    if (b.y == p.y && a.y == p.y) {
      // Horizontal edge at the query height; boundary when p.x lies between.
      if ((b.x > p.x) == (a.x < p.x) && (b.x != p.x) && (a.x != p.x))
        return Classification::OnBoundary;
      continue;
    }
    if ((a.y < p.y) == (b.y < p.y)) continue;
    const int dir = (b.y > a.y) ? 1 : -1;
    if (a.x >= p.x) {
      if (b.x > p.x) {
        w += dir;
      } else {
        const double det = det_around(p, a, b);
        if (det == 0.0) return Classification::OnBoundary;
        if ((det > 0.0) == (b.y > a.y)) w += dir;
      }
    } else if (b.x > p.x) {
      const double det = det_around(p, a, b);
      if (det == 0.0) return Classification::OnBoundary;
      if ((det > 0.0) == (b.y > a.y)) w += dir;
    }
  }
  return w != 0 ? Classification::Inside : Classification::Outside;
}

Classification modified_polygon(const Polygon& poly, const Point2& p) {
  const std::size_t i = nearest_vertex(poly, p);
  if (same_point(p, poly.vertex(i))) return Classification::OnBoundary;

  const auto seg_dist_sq = [&p](const Point2& a, const Point2& b) {
    const Vector2 t = sub(b, a);
    const double len2 = dot(t, t);
    double u = dot(sub(p, a), t) / len2;
    u = u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
    return distance_sq(Point2(a.x + u * t.dx, a.y + u * t.dy), p);
  };

  const Edge in_e = poly.edge(i);                    // v_{i-1} -> v_i
  const Edge out_e = poly.edge(poly.next_index(i));  // v_i -> v_{i+1}
  const double d_in = seg_dist_sq(in_e.from, in_e.to);
  const double d_out = seg_dist_sq(out_e.from, out_e.to);
  const Edge& target = (d_out <= d_in) ? out_e : in_e;  // tie goes outgoing

  // Splitting a -> b into a -> p -> b changes the signed area by
  // 0.5 * cross(p - a, b - a).
  const double delta = 0.5 * cross_z(sub(p, target.from), sub(target.to, target.from));
  const double area = poly.signed_area();
  if (std::abs(delta) <= 1e-12 * std::abs(area)) return Classification::OnBoundary;
  return std::abs(area + delta) < std::abs(area) ? Classification::Inside
                                                 : Classification::Outside;
}

Classification classify_point(const Polygon& poly, const Point2& p, Method m,
                              const DualConfig& cfg) {
  switch (m) {
    case Method::DualPerspective: return classify(poly, p, cfg);
    case Method::RayCasting: return ray_casting(poly, p);
    case Method::AngleSum: return angle_sum(poly, p).result;
    case Method::SumOfAreas: return sum_of_areas(poly, p);
    case Method::HA6: return ha6(poly, p);
    case Method::HA7: return ha7(poly, p);
    case Method::ModifiedPolygon: return modified_polygon(poly, p);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace pip
