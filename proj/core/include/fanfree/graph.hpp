#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanfree {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool incident(VertexId x) const noexcept { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const noexcept { return incident(o.u) || incident(o.v); }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * @brief Simple undirected graph with stable edge indices.
 *
 * Edges are stored with u < v. Indices follow insertion order.
 * Invariants are not enforced on construction; use validate_graph.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n) {}
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  EdgeId add_edge(VertexId a, VertexId b);
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// incident edge ids per vertex, ascending
  std::vector<std::vector<EdgeId>> incidence() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

enum class GraphViolationKind { empty_vertex_set, vertex_out_of_range, self_loop, duplicate_edge };

struct GraphViolation {
  GraphViolationKind kind;
  std::string message;
};

std::string to_string(GraphViolationKind kind);

/// first violated invariant, or nullopt when the graph is simple
std::optional<GraphViolation> validate_graph(const Graph& g);

/// |E|
std::size_t edge_count_identity(const Graph& g);

/// re-stores every edge with u < v, keeping indices
Graph canonicalize(const Graph& g);

/// number of connected components, isolated vertices included
std::size_t component_count(const Graph& g, const std::vector<EdgeId>& subset);

std::optional<std::vector<int>> two_coloring(const Graph& g, const std::vector<EdgeId>& subset);

Graph complete_graph(std::size_t n);

}  // namespace fanfree
