#include "pip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pip {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

Point2::Point2(double x_, double y_) : x(x_), y(y_) {
  require_finite(x_, "point coordinate");
  require_finite(y_, "point coordinate");
}

Vector2::Vector2(double dx_, double dy_) : dx(dx_), dy(dy_) {
  require_finite(dx_, "vector component");
  require_finite(dy_, "vector component");
}

double cross_z(const Vector2& a, const Vector2& b) { return a.dx * b.dy - a.dy * b.dx; }

double dot(const Vector2& a, const Vector2& b) { return a.dx * b.dx + a.dy * b.dy; }

Vector2 sub(const Point2& a, const Point2& b) { return Vector2(a.x - b.x, a.y - b.y); }

double distance_sq(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Polygon::Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (same_point(verts_[i], verts_[(i + 1) % n]))
      throw std::invalid_argument("polygon has consecutive duplicate vertices");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = verts_[i];
    const Point2& b = verts_[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  signed_area_ = 0.5 * acc;
}

Orientation Polygon::orientation() const {
  if (signed_area_ > 0.0) return Orientation::Ccw;
  if (signed_area_ < 0.0) return Orientation::Cw;
  throw std::domain_error("polygon has zero area, orientation undefined");
}

Edge Polygon::edge(std::size_t j) const {
  const std::size_t n = verts_.size();
  j %= n;
  return Edge{j, verts_[(j + n - 1) % n], verts_[j]};
}

Polygon canonicalize_ccw(const Polygon& poly) {
  if (poly.orientation() == Orientation::Ccw) return poly;
  std::vector<Point2> verts = poly.vertices();
  std::reverse(verts.begin() + 1, verts.end());  // keeps vertex 0 first
  return Polygon(std::move(verts));
}

Vector2 outward_normal(const Polygon& poly, std::size_t edge_index) {
  const Edge e = poly.edge(edge_index);
  const Vector2 t = sub(e.to, e.from);
  return Vector2(t.dy, -t.dx);
}

Point2 edge_midpoint(const Edge& e) {
  return Point2(0.5 * (e.from.x + e.to.x), 0.5 * (e.from.y + e.to.y));
}

std::size_t nearest_vertex(const Polygon& poly, const Point2& p) {
  std::size_t best = 0;
  double best_d = distance_sq(poly.vertex(0), p);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double d = distance_sq(poly.vertex(i), p);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

double side_scalar(const Polygon& poly, std::size_t edge_index, const Point2& p) {
  const Edge e = poly.edge(edge_index);
  const Vector2 t = sub(e.to, e.from);
  const Point2 m = edge_midpoint(e);
  // n . (p - m) with n = (t.dy, -t.dx), expanded so that symmetric inputs
  // cancel exactly: both products vanish bitwise when p lies on an axis or
  // diagonal carrier built from mirrored coordinates.
  return t.dy * (p.x - m.x) - t.dx * (p.y - m.y);
}

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b, double tol) {
  const double cross = (p.x - a.x) * (b.y - a.y) - (p.y - a.y) * (b.x - a.x);
  if (tol == 0.0) {
    if (cross != 0.0) return false;
  } else if (std::abs(cross) > tol) {
    return false;
  }
  const double lo_x = std::min(a.x, b.x) - tol;
  const double hi_x = std::max(a.x, b.x) + tol;
  const double lo_y = std::min(a.y, b.y) - tol;
  const double hi_y = std::max(a.y, b.y) + tol;
  return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
}

namespace {

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

}  // namespace

std::optional<Point2> segment_intersection(const Point2& a1, const Point2& a2, const Point2& b1,
                                           const Point2& b2) {
  const int o1 = orient_sign(a1, a2, b1);
  const int o2 = orient_sign(a1, a2, b2);
  const int o3 = orient_sign(b1, b2, a1);
  const int o4 = orient_sign(b1, b2, a2);

  if (o1 != o2 && o3 != o4 && (o1 != 0 || o2 != 0)) {
    // Proper crossing or endpoint touch with a transversal line. The sign
    // tests can be rounding noise when the segments are nearly collinear
    // (radial edges sharing a carrier), so both parameters are validated
    // before the point is trusted.
    const Vector2 da = sub(a2, a1);
    const Vector2 db = sub(b2, b1);
    const double denom = cross_z(da, db);
    if (denom != 0.0) {
      constexpr double kParamSlack = 1e-9;
      double t = cross_z(sub(b1, a1), db) / denom;
      const double u = cross_z(sub(b1, a1), da) / denom;
      if (t >= -kParamSlack && t <= 1.0 + kParamSlack && u >= -kParamSlack &&
          u <= 1.0 + kParamSlack) {
        t = std::clamp(t, 0.0, 1.0);
        return Point2(a1.x + t * da.dx, a1.y + t * da.dy);
      }
    }
  }

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: intersect the parameter ranges along a1 -> a2 and return the
    // overlap point nearest a1.
    const Vector2 da = sub(a2, a1);
    const double len2 = dot(da, da);
    if (len2 == 0.0) {
      return point_on_segment(a1, b1, b2) ? std::optional<Point2>(a1) : std::nullopt;
    }
    double tb1 = dot(sub(b1, a1), da) / len2;
    double tb2 = dot(sub(b2, a1), da) / len2;
    if (tb1 > tb2) std::swap(tb1, tb2);
    const double lo = std::max(0.0, tb1);
    const double hi = std::min(1.0, tb2);
    if (lo > hi) return std::nullopt;
    if (lo == 0.0) return a1;
    if (lo == 1.0) return a2;
    return Point2(a1.x + lo * da.dx, a1.y + lo * da.dy);
  }

  // One endpoint on the other segment.
  if (o1 == 0 && point_on_segment(b1, a1, a2)) return b1;
  if (o2 == 0 && point_on_segment(b2, a1, a2)) return b2;
  if (o3 == 0 && point_on_segment(a1, b1, b2)) return a1;
  if (o4 == 0 && point_on_segment(a2, b1, b2)) return a2;
  return std::nullopt;
}

bool validate_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Edge ei = poly.edge(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || poly.next_index(i) == j || poly.next_index(j) == i) continue;
      const Edge ej = poly.edge(j);
      if (segment_intersection(ei.from, ei.to, ej.from, ej.to)) return false;
    }
  }
  return true;
}

}  // namespace pip
