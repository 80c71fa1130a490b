#include "fanfree/constructions.hpp"
#include "fanfree/graph.hpp"

#include <gtest/gtest.h>

using namespace fanfree;

TEST(Graph, TriangleIsValid) {
  EXPECT_FALSE(validate_graph(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
}

TEST(Graph, DuplicateEdgeIsReported) {
  const auto bad = validate_graph(Graph(2, {{0, 1}, {0, 1}}));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, GraphViolationKind::duplicate_edge);
}

TEST(Graph, ReversedDuplicateIsReported) {
  const auto bad = validate_graph(Graph(2, {{0, 1}, {1, 0}}));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, GraphViolationKind::duplicate_edge);
}

TEST(Graph, SelfLoopIsReported) {
  const auto bad = validate_graph(Graph(4, {{3, 3}}));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, GraphViolationKind::self_loop);
}

TEST(Graph, OutOfRangeAndEmpty) {
  EXPECT_EQ(validate_graph(Graph(2, {{0, 5}}))->kind, GraphViolationKind::vertex_out_of_range);
  EXPECT_EQ(validate_graph(Graph(0))->kind, GraphViolationKind::empty_vertex_set);
}

TEST(Graph, EdgeCountIdentity) {
  EXPECT_EQ(edge_count_identity(complete_graph(6)), 15u);
  EXPECT_EQ(edge_count_identity(Graph(5)), 0u);
  EXPECT_EQ(edge_count_identity(gen_quad_extremal(12).graph), 40u);
}

TEST(Graph, EdgesAreStoredWithSmallerEndpointFirst) {
  Graph g(4, {{3, 1}, {2, 0}});
  EXPECT_EQ(g.edge(0), (Edge{1, 3}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.find_edge(3, 1), 0u);
  EXPECT_FALSE(g.find_edge(0, 1).has_value());
}

TEST(Graph, CanonicalizeIsIdempotent) {
  Graph g(6, {{5, 1}, {0, 3}, {2, 4}, {1, 0}});
  const auto once = canonicalize(g);
  EXPECT_EQ(canonicalize(once), once);
  EXPECT_EQ(once.edge_count(), g.edge_count());
}

TEST(Graph, ComponentsAndTwoColoring) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
  std::vector<EdgeId> all{0, 1, 2, 3, 4};
  EXPECT_EQ(component_count(g, all), 2u);
  EXPECT_TRUE(two_coloring(g, all).has_value());

  Graph odd(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(two_coloring(odd, {0, 1, 2}).has_value());
  EXPECT_TRUE(two_coloring(odd, {0, 1}).has_value());
}

TEST(Graph, IsolatedVerticesCountAsComponents) {
  Graph g(4, {{0, 1}});
  EXPECT_EQ(component_count(g, {0}), 3u);
  EXPECT_EQ(component_count(g, {}), 4u);
}
