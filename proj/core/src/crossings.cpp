#include "fanfree/crossings.hpp"

#include "fanfree/error.hpp"
#include "fanfree/geometry.hpp"

#include <algorithm>
#include <map>

namespace fanfree {

std::string to_string(SimplicityViolationKind kind) {
  switch (kind) {
    case SimplicityViolationKind::vertex_on_edge: return "vertex-on-edge";
    case SimplicityViolationKind::adjacent_overlap: return "adjacent-overlap";
    case SimplicityViolationKind::coincident_vertices: return "coincident-vertices";
  }
  return "unknown";
}

namespace {

void require_coords(const StraightLineDrawing& d) {
  if (d.coords.size() != d.graph.vertex_count()) {
    throw Error("drawing has " + std::to_string(d.coords.size()) + " coordinates for " +
                std::to_string(d.graph.vertex_count()) + " vertices");
  }
  if (auto bad = validate_graph(d.graph)) throw Error("invalid graph: " + bad->message);
}

}  // namespace

SimplicityReport validate_simplicity(const StraightLineDrawing& d) {
  require_coords(d);
  const auto pts = to_integer_points(d.coords);
  const auto& g = d.graph;
  SimplicityReport report;
  auto add = [&](SimplicityViolationKind kind, std::uint32_t a, std::uint32_t b) {
    report.violations.push_back({kind, a, b});
  };

  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if (pts[a] == pts[b]) add(SimplicityViolationKind::coincident_vertices, a, b);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (ed.incident(w)) continue;
      if (on_open_segment(pts[w], pts[ed.u], pts[ed.v])) add(SimplicityViolationKind::vertex_on_edge, w, e);
    }
  }
  const auto inc = g.incidence();
  std::vector<std::pair<EdgeId, EdgeId>> overlaps;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < inc[v].size(); ++i) {
      for (std::size_t j = i + 1; j < inc[v].size(); ++j) {
        const EdgeId e = inc[v][i];
        const EdgeId f = inc[v][j];
        if (adjacent_overlap(pts[v], pts[g.edge(e).other(v)], pts[g.edge(f).other(v)])) {
          overlaps.emplace_back(std::min(e, f), std::max(e, f));
        }
      }
    }
  }
  std::sort(overlaps.begin(), overlaps.end());
  for (const auto& [e, f] : overlaps) add(SimplicityViolationKind::adjacent_overlap, e, f);
  report.ok = report.violations.empty();
  return report;
}

CrossingRelation compute_crossings(const StraightLineDrawing& d) {
  require_coords(d);
  const auto pts = to_integer_points(d.coords);
  const auto& g = d.graph;
  std::vector<EdgePair> pairs;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto& a = g.edge(i);
    for (EdgeId j = i + 1; j < g.edge_count(); ++j) {
      const auto& b = g.edge(j);
      if (a.shares_endpoint(b)) {
        const VertexId p = a.incident(b.u) ? b.u : b.v;
        if (adjacent_overlap(pts[p], pts[a.other(p)], pts[b.other(p)])) {
          throw SimplicityError("adjacent-overlap", i, j);
        }
        continue;
      }
      switch (classify_contact(pts[a.u], pts[a.v], pts[b.u], pts[b.v])) {
        case SegmentContact::disjoint: break;
        case SegmentContact::proper_crossing: pairs.emplace_back(i, j); break;
        case SegmentContact::touching: throw SimplicityError("endpoint-touches-interior", i, j);
        case SegmentContact::collinear_overlap: throw SimplicityError("collinear-overlap", i, j);
      }
    }
  }
  return CrossingRelation(std::move(pairs));
}

std::vector<FanWitness> find_k_fans(const Graph& g, const CrossingRelation& c, int k) {
  if (k < 2) throw DomainError("k must be at least 2, got " + std::to_string(k));
  if (auto bad = validate_crossings(g, c)) throw DomainError("invalid crossing relation: " + *bad);
  const auto adj = c.adjacency(g.edge_count());
  std::vector<FanWitness> out;
  for (EdgeId crosser = 0; crosser < g.edge_count(); ++crosser) {
    if (adj[crosser].size() < static_cast<std::size_t>(k)) continue;
    std::map<VertexId, std::vector<EdgeId>> buckets;
    for (EdgeId e : adj[crosser]) {
      buckets[g.edge(e).u].push_back(e);
      buckets[g.edge(e).v].push_back(e);
    }
    for (auto& [apex, bucket] : buckets) {
      if (bucket.size() < static_cast<std::size_t>(k)) continue;
      bucket.resize(static_cast<std::size_t>(k));
      out.push_back({crosser, apex, bucket});
    }
  }
  return out;
}

bool is_k_fan_free(const Graph& g, const CrossingRelation& c, int k) { return find_k_fans(g, c, k).empty(); }

bool is_k_fan_free(const StraightLineDrawing& d, int k) { return is_k_fan_free(d.graph, compute_crossings(d), k); }

bool is_k_fan_free(const AbstractDrawing& d, int k) { return is_k_fan_free(d.graph, d.crossings, k); }

bool is_k_fan_free(const Drawing& d, int k) {
  return std::visit([k](const auto& x) { return is_k_fan_free(x, k); }, d);
}

CrossingRelation crossings_of(const Drawing& d) {
  if (const auto* s = std::get_if<StraightLineDrawing>(&d)) return compute_crossings(*s);
  return std::get<AbstractDrawing>(d).crossings;
}

}  // namespace fanfree
