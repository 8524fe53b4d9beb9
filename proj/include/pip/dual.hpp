#pragma once

#include <cstddef>
#include <utility>

#include "pip/geometry.hpp"

namespace pip {

// Outcome of testing the query point against one parent edge.
// s = +1 outer side, -1 inner side, 0 when |side scalar| <= tolerance.
// s == 0 splits into on_edge (the point projects onto the segment span) and
// dismissed (it hits the carrier line beyond the span). Exactly one of the
// flags is set when s == 0; both are clear otherwise.
struct EdgeVerdict {
  int s = 0;
  bool on_edge = false;
  bool dismissed = false;
};

struct DualConfig {
  bool slender_check = false;
  double on_edge_tolerance = 0.0;
};

// Record of one classification, for debugging and tests.
// verdicts[0] is the outgoing parent edge e_{i+1}, verdicts[1] the incoming e_i.
struct DecisionTrace {
  std::size_t closest_vertex = 0;
  std::size_t parent_edges[2] = {0, 0};
  double c = 0.0;
  EdgeVerdict verdicts[2];
  bool fallback_used = false;
  Classification result = Classification::Outside;
};

// A1 = next - v, A2 = prev - v for vertex v.
std::pair<Vector2, Vector2> corner_vectors(const Polygon& poly, std::size_t vertex_index);

// cross_z(A1, A2). Positive at convex vertices of a counterclockwise ring,
// negative at reflex vertices, zero when the parents are collinear.
double corner_scalar(const Polygon& poly, std::size_t vertex_index);

EdgeVerdict edge_verdict(const Polygon& poly, std::size_t edge_index, const Point2& p,
                         double tol = 0.0);

// Combine the corner scalar with the two parent verdicts. The parent carriers
// split the neighborhood of the vertex into wedges; the query lies in the
// wedge its sign pair names, so:
//   c > 0 (convex):  Inside only when both verdicts are -1.
//   c < 0 (reflex):  Outside only when both verdicts are +1.
//   c = 0:           the carriers coincide, either verdict decides.
// One dismissed verdict defers to the other. Throws std::invalid_argument when
// a verdict is on_edge (the caller already knows the answer) or when both are
// dismissed (the caller must fall back).
Classification resolve(double corner, const EdgeVerdict& outgoing, const EdgeVerdict& incoming);

// Visibility repair for slender geometry. Scans the segment anchor -> p
// against every edge not incident to the anchor, ignoring hits exactly at the
// anchor vertex. Returns the endpoint of the hit edge nearest p, where the hit
// chosen is the intersection nearest p (ties to the lower edge index, then the
// lower vertex index). Returns anchor unchanged when the segment is clear.
std::size_t slender_adjust(const Polygon& poly, std::size_t anchor, const Point2& p);

Classification classify(const Polygon& poly, const Point2& p, const DualConfig& cfg = {});
Classification classify(const Polygon& poly, const Point2& p, const DualConfig& cfg,
                        DecisionTrace& trace);

// Splits every edge into ceil(length / max_edge_length) equal pieces.
// Throws std::invalid_argument unless max_edge_length > 0.
Polygon rediscretize(const Polygon& poly, double max_edge_length);

}  // namespace pip
