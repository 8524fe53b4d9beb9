#include "pip/dual.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pip/baselines.hpp"

namespace pip {

std::pair<Vector2, Vector2> corner_vectors(const Polygon& poly, std::size_t vertex_index) {
  const Point2& v = poly.vertex(vertex_index);
  const Point2& nxt = poly.vertex(poly.next_index(vertex_index));
  const Point2& prv = poly.vertex(poly.prev_index(vertex_index));
  return {sub(nxt, v), sub(prv, v)};
}

double corner_scalar(const Polygon& poly, std::size_t vertex_index) {
  const auto [a1, a2] = corner_vectors(poly, vertex_index);
  return cross_z(a1, a2);
}

EdgeVerdict edge_verdict(const Polygon& poly, std::size_t edge_index, const Point2& p,
                         double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be >= 0");
  const double d = side_scalar(poly, edge_index, p);
  EdgeVerdict v;
  if (std::abs(d) > tol) {
    v.s = d > 0.0 ? 1 : -1;
    return v;
  }
  v.s = 0;
  const Edge e = poly.edge(edge_index);
  const Vector2 t = sub(e.to, e.from);
  const double len2 = dot(t, t);
  const double proj = dot(sub(p, e.from), t);
  if (proj >= 0.0 && proj <= len2) {
    v.on_edge = true;
  } else {
    v.dismissed = true;
  }
  return v;
}

Classification resolve(double corner, const EdgeVerdict& outgoing, const EdgeVerdict& incoming) {
  if (outgoing.on_edge || incoming.on_edge)
    throw std::invalid_argument("resolve called with an on_edge verdict");
  if (outgoing.dismissed && incoming.dismissed)
    throw std::invalid_argument("resolve called with both verdicts dismissed");
  if (outgoing.dismissed)
    return incoming.s > 0 ? Classification::Outside : Classification::Inside;
  if (incoming.dismissed)
    return outgoing.s > 0 ? Classification::Outside : Classification::Inside;
  if (corner > 0.0) {
    return (outgoing.s < 0 && incoming.s < 0) ? Classification::Inside : Classification::Outside;
  }
  if (corner < 0.0) {
    return (outgoing.s > 0 && incoming.s > 0) ? Classification::Outside : Classification::Inside;
  }
  return outgoing.s > 0 ? Classification::Outside : Classification::Inside;
}

std::size_t slender_adjust(const Polygon& poly, std::size_t anchor, const Point2& p) {
  const std::size_t n = poly.size();
  const Point2& v = poly.vertex(anchor);
  const std::size_t in_edge = anchor;                   // v_{anchor-1} -> v_anchor
  const std::size_t out_edge = poly.next_index(anchor); // v_anchor -> v_{anchor+1}

  bool found = false;
  double best_d = 0.0;
  std::size_t best_edge = 0;
  Point2 best_hit;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == in_edge || j == out_edge) continue;
    const Edge e = poly.edge(j);
    const auto hit = segment_intersection(v, p, e.from, e.to);
    if (!hit) continue;
    if (same_point(*hit, v)) continue;  // touching the anchor itself is not occlusion
    const double d = distance_sq(*hit, p);
    if (!found || d < best_d) {
      found = true;
      best_d = d;
      best_edge = j;
      best_hit = *hit;
    }
  }
  if (!found) return anchor;

  const Edge e = poly.edge(best_edge);
  const std::size_t from_idx = poly.prev_index(best_edge);
  const std::size_t to_idx = best_edge;
  const double df = distance_sq(e.from, p);
  const double dt = distance_sq(e.to, p);
  if (df < dt) return from_idx;
  if (dt < df) return to_idx;
  return std::min(from_idx, to_idx);
}

namespace {

Classification classify_impl(const Polygon& poly, const Point2& p, const DualConfig& cfg,
                             DecisionTrace* trace) {
  const std::size_t n = poly.size();
  std::size_t anchor = nearest_vertex(poly, p);
  std::size_t hops = 0;

  for (;;) {
    if (same_point(p, poly.vertex(anchor))) {
      if (trace) {
        trace->closest_vertex = anchor;
        trace->result = Classification::OnBoundary;
      }
      return Classification::OnBoundary;
    }

    const std::size_t in_edge = anchor;
    const std::size_t out_edge = poly.next_index(anchor);
    const EdgeVerdict v_out = edge_verdict(poly, out_edge, p, cfg.on_edge_tolerance);
    const EdgeVerdict v_in = edge_verdict(poly, in_edge, p, cfg.on_edge_tolerance);
    const double c = corner_scalar(poly, anchor);

    if (trace) {
      trace->closest_vertex = anchor;
      trace->parent_edges[0] = out_edge;
      trace->parent_edges[1] = in_edge;
      trace->c = c;
      trace->verdicts[0] = v_out;
      trace->verdicts[1] = v_in;
      trace->fallback_used = false;
    }

    if (v_out.on_edge || v_in.on_edge) {
      if (trace) trace->result = Classification::OnBoundary;
      return Classification::OnBoundary;
    }

    if (v_out.dismissed && v_in.dismissed) {
      // Both parents hit beyond their spans: the corner tells us nothing.
      const Classification r = ray_casting(poly, p);
      if (trace) {
        trace->fallback_used = true;
        trace->result = r;
      }
      return r;
    }

    if (cfg.slender_check && hops < n) {
      const std::size_t next = slender_adjust(poly, anchor, p);
      if (next != anchor) {
        anchor = next;
        ++hops;
        continue;
      }
    }

    const Classification r = resolve(c, v_out, v_in);
    if (trace) trace->result = r;
    return r;
  }
}

}  // namespace

Classification classify(const Polygon& poly, const Point2& p, const DualConfig& cfg) {
  return classify_impl(poly, p, cfg, nullptr);
}

Classification classify(const Polygon& poly, const Point2& p, const DualConfig& cfg,
                        DecisionTrace& trace) {
  return classify_impl(poly, p, cfg, &trace);
}

Polygon rediscretize(const Polygon& poly, double max_edge_length) {
  if (!(max_edge_length > 0.0) || !std::isfinite(max_edge_length))
    throw std::invalid_argument("max_edge_length must be positive");
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly.vertex(i);
    const Point2& b = poly.vertex(poly.next_index(i));
    out.push_back(a);
    const double len = std::sqrt(distance_sq(a, b));
    const auto pieces = static_cast<std::size_t>(std::ceil(len / max_edge_length));
    for (std::size_t k = 1; k < pieces; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(pieces);
      out.emplace_back(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
    }
  }
  return Polygon(std::move(out));
}

}  // namespace pip
