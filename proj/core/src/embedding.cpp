#include "fanfree/crossings.hpp"

#include "fanfree/geometry.hpp"

#include <algorithm>

namespace fanfree {

namespace {

// crossing parameter of segment ab with segment cd, as an unnormalized fraction along ab
struct Param {
  BigInt num;
  BigInt den;
};

Param crossing_param(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d) {
  const BigInt dx = d.x - c.x;
  const BigInt dy = d.y - c.y;
  BigInt num = (c.x - a.x) * dy - (c.y - a.y) * dx;
  BigInt den = (b.x - a.x) * dy - (b.y - a.y) * dx;
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

Embedding embed(const StraightLineDrawing& d, const CrossingRelation& c) {
  const auto pts = to_integer_points(d.coords);
  const auto& g = d.graph;
  Embedding emb;
  emb.rotation = g.incidence();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& rot = emb.rotation[v];
    std::stable_sort(rot.begin(), rot.end(), [&](EdgeId e, EdgeId f) {
      const auto& pe = pts[g.edge(e).other(v)];
      const auto& pf = pts[g.edge(f).other(v)];
      const IntPoint de{pe.x - pts[v].x, pe.y - pts[v].y};
      const IntPoint df{pf.x - pts[v].x, pf.y - pts[v].y};
      return compare_direction(de, df) < 0;
    });
  }
  const auto adj = c.adjacency(g.edge_count());
  emb.crossing_order.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& a = pts[g.edge(e).u];
    const auto& b = pts[g.edge(e).v];
    std::vector<std::pair<Param, EdgeId>> keyed;
    for (EdgeId f : adj[e]) keyed.emplace_back(crossing_param(a, b, pts[g.edge(f).u], pts[g.edge(f).v]), f);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
      const BigInt lhs = x.first.num * y.first.den;
      const BigInt rhs = y.first.num * x.first.den;
      if (lhs != rhs) return lhs < rhs;
      return x.second < y.second;
    });
    for (auto& kv : keyed) emb.crossing_order[e].push_back(kv.second);
  }
  return emb;
}

AbstractDrawing to_abstract(const StraightLineDrawing& d) {
  AbstractDrawing out;
  out.graph = d.graph;
  out.crossings = compute_crossings(d);
  out.provenance = d.provenance;
  out.embedding = embed(d, out.crossings);
  return out;
}

}  // namespace fanfree
