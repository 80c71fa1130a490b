#pragma once

#include "fanfree/graph.hpp"
#include "fanfree/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fanfree {

using EdgePair = std::pair<EdgeId, EdgeId>;

/**
 * @brief Set of unordered crossing edge pairs, stored sorted with first < second.
 */
class CrossingRelation {
 public:
  CrossingRelation() = default;
  explicit CrossingRelation(std::vector<EdgePair> pairs);

  const std::vector<EdgePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(EdgeId a, EdgeId b) const;

  /// for each edge, the ascending list of edges it crosses
  std::vector<std::vector<EdgeId>> adjacency(std::size_t edge_count) const;

  friend bool operator==(const CrossingRelation&, const CrossingRelation&) = default;

 private:
  std::vector<EdgePair> pairs_;
};

/// nullopt when every pair names two distinct, existing, non-adjacent edges
std::optional<std::string> validate_crossings(const Graph& g, const CrossingRelation& c);

struct StraightLineDrawing {
  Graph graph;
  std::vector<Point> coords;
  std::string provenance = "external";
};

/**
 * @brief Combinatorial embedding data for a drawing.
 *
 * rotation[v] lists the edges at v in counterclockwise order.
 * crossing_order[e] lists the edges crossed by e, ordered from edge(e).u towards edge(e).v.
 */
struct Embedding {
  std::vector<std::vector<EdgeId>> rotation;
  std::vector<std::vector<EdgeId>> crossing_order;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct AbstractDrawing {
  Graph graph;
  CrossingRelation crossings;
  std::string provenance = "external";
  std::optional<Embedding> embedding;
};

using Drawing = std::variant<StraightLineDrawing, AbstractDrawing>;

/** @brief Evidence of a k-fan crossing: crosser crosses every fan edge, all incident to apex. */
struct FanWitness {
  EdgeId crosser = 0;
  VertexId apex = 0;
  std::vector<EdgeId> fan;

  friend bool operator==(const FanWitness&, const FanWitness&) = default;
  friend auto operator<=>(const FanWitness&, const FanWitness&) = default;
};

const Graph& graph_of(const Drawing& d);
const std::string& provenance_of(const Drawing& d);

}  // namespace fanfree
