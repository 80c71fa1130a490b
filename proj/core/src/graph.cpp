#include "fanfree/graph.hpp"
#include "fanfree/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fanfree {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  edges_.push_back({a, b});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == a && edges_[i].v == b) return static_cast<EdgeId>(i);
  }
  return std::nullopt;
}

std::vector<std::vector<EdgeId>> Graph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < n_) inc[e.u].push_back(static_cast<EdgeId>(i));
    if (e.v < n_ && e.v != e.u) inc[e.v].push_back(static_cast<EdgeId>(i));
  }
  return inc;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    if (e.u < n_) ++deg[e.u];
    if (e.v < n_) ++deg[e.v];
  }
  return deg;
}

std::string to_string(GraphViolationKind kind) {
  switch (kind) {
    case GraphViolationKind::empty_vertex_set: return "empty-vertex-set";
    case GraphViolationKind::vertex_out_of_range: return "vertex-out-of-range";
    case GraphViolationKind::self_loop: return "self-loop";
    case GraphViolationKind::duplicate_edge: return "duplicate-edge";
  }
  return "unknown";
}

std::optional<GraphViolation> validate_graph(const Graph& g) {
  if (g.vertex_count() == 0) {
    return GraphViolation{GraphViolationKind::empty_vertex_set, "graph has no vertices"};
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [a, b] = g.edges()[i];
    if (a > b) std::swap(a, b);
    if (b >= g.vertex_count()) {
      return GraphViolation{GraphViolationKind::vertex_out_of_range,
                            "edge " + std::to_string(i) + " names vertex " + std::to_string(b) +
                                " outside [0, " + std::to_string(g.vertex_count()) + ")"};
    }
    if (a == b) {
      return GraphViolation{GraphViolationKind::self_loop,
                            "edge " + std::to_string(i) + " is a self-loop at " + std::to_string(a)};
    }
    if (!seen.emplace(a, b).second) {
      return GraphViolation{GraphViolationKind::duplicate_edge, "edge " + std::to_string(i) + " duplicates (" +
                                                                    std::to_string(a) + "," + std::to_string(b) + ")"};
    }
  }
  return std::nullopt;
}

std::size_t edge_count_identity(const Graph& g) { return g.edge_count(); }

Graph canonicalize(const Graph& g) { return Graph(g.vertex_count(), g.edges()); }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::size_t component_count(const Graph& g, const std::vector<EdgeId>& subset) {
  DisjointSets ds(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (EdgeId e : subset) {
    if (ds.unite(g.edge(e).u, g.edge(e).v)) --count;
  }
  return count;
}

std::optional<std::vector<int>> two_coloring(const Graph& g, const std::vector<EdgeId>& subset) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (EdgeId e : subset) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

CrossingRelation::CrossingRelation(std::vector<EdgePair> pairs) : pairs_(std::move(pairs)) {
  for (auto& p : pairs_) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool CrossingRelation::contains(EdgeId a, EdgeId b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(pairs_.begin(), pairs_.end(), EdgePair{a, b});
}

std::vector<std::vector<EdgeId>> CrossingRelation::adjacency(std::size_t edge_count) const {
  std::vector<std::vector<EdgeId>> adj(edge_count);
  for (const auto& [a, b] : pairs_) {
    if (a < edge_count && b < edge_count) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::optional<std::string> validate_crossings(const Graph& g, const CrossingRelation& c) {
  for (const auto& [a, b] : c.pairs()) {
    if (b >= g.edge_count()) return "crossing names missing edge " + std::to_string(b);
    if (a == b) return "edge " + std::to_string(a) + " crosses itself";
    if (g.edge(a).shares_endpoint(g.edge(b))) {
      return "adjacent edges " + std::to_string(a) + " and " + std::to_string(b) + " cross";
    }
  }
  return std::nullopt;
}

const Graph& graph_of(const Drawing& d) {
  return std::visit([](const auto& x) -> const Graph& { return x.graph; }, d);
}

const std::string& provenance_of(const Drawing& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.provenance; }, d);
}

}  // namespace fanfree
