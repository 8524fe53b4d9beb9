#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace pip {

enum class Classification { Outside = 0, Inside = 1, OnBoundary = 2 };

enum class Orientation { Ccw, Cw };

// Coordinates must be finite; constructors throw std::invalid_argument otherwise.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
  Point2() = default;
  Point2(double x_, double y_);
};

struct Vector2 {
  double dx = 0.0;
  double dy = 0.0;
  Vector2() = default;
  Vector2(double dx_, double dy_);
};

inline bool same_point(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

// Edge j runs v_{j-1} -> v_j, indices taken mod N.
struct Edge {
  std::size_t index = 0;
  Point2 from;
  Point2 to;
};

double cross_z(const Vector2& a, const Vector2& b);
double dot(const Vector2& a, const Vector2& b);
Vector2 sub(const Point2& a, const Point2& b);  // a - b
double distance_sq(const Point2& a, const Point2& b);

// Closed vertex ring, at least 3 vertices, no consecutive duplicates
// (exact coordinate comparison, first and last vertex included).
// Signed area is cached at construction.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  std::size_t size() const { return verts_.size(); }
  const Point2& vertex(std::size_t i) const { return verts_[i]; }
  const std::vector<Point2>& vertices() const { return verts_; }

  double signed_area() const { return signed_area_; }
  Orientation orientation() const;  // throws std::domain_error when the area is zero

  Edge edge(std::size_t j) const;  // v_{j-1} -> v_j
  std::size_t prev_index(std::size_t i) const { return (i + verts_.size() - 1) % verts_.size(); }
  std::size_t next_index(std::size_t i) const { return (i + 1) % verts_.size(); }

 private:
  std::vector<Point2> verts_;
  double signed_area_ = 0.0;
};

// Returns a counterclockwise copy; vertex 0 stays first either way.
// Throws std::domain_error when the signed area is zero.
Polygon canonicalize_ccw(const Polygon& poly);

// (t.dy, -t.dx) for edge tangent t = to - from; points outward when the ring
// is counterclockwise. Not normalized.
Vector2 outward_normal(const Polygon& poly, std::size_t edge_index);

Point2 edge_midpoint(const Edge& e);

// Index of the vertex minimizing squared distance to p, ties to the lowest index.
std::size_t nearest_vertex(const Polygon& poly, const Point2& p);

// n . (p - m) with n = outward_normal and m the edge midpoint. Positive on the
// outer side of a counterclockwise ring, negative on the inner side, zero on
// the carrier line. Unnormalized: scales with the edge length.
double side_scalar(const Polygon& poly, std::size_t edge_index, const Point2& p);

// tol = 0 tests exact collinearity (cross product compares equal to 0.0) plus
// the bounding box; tol > 0 widens both tests by tol.
bool point_on_segment(const Point2& p, const Point2& a, const Point2& b, double tol = 0.0);

// Closed segments. Proper crossings return the crossing point; endpoint
// touches return the touch point; collinear overlaps return the overlap
// endpoint nearest a1. Disjoint segments return nullopt.
std::optional<Point2> segment_intersection(const Point2& a1, const Point2& a2,
                                           const Point2& b1, const Point2& b2);

// True when no two non-adjacent edges intersect.
bool validate_simple(const Polygon& poly);

}  // namespace pip
