#include "fanfree/constructions.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/decompose.hpp"
#include "fanfree/error.hpp"
#include "fanfree_tools/random_drawings.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace fanfree;
using fanfree::fixtures::drawing;
using fanfree::fixtures::fan_fixture;
using fanfree::fixtures::x_crossing;

namespace {

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> h(g.edge_count());
  std::iota(h.begin(), h.end(), 0u);
  return h;
}

const Face& outer_face(const FaceStructure& fs) {
  return *std::find_if(fs.faces.begin(), fs.faces.end(), [](const Face& f) { return !f.bounded; });
}

bool on_boundary(const Face& f, VertexId v) {
  for (const auto& w : f.walks) {
    for (const auto& h : w) {
      if (h.from == v) return true;
    }
  }
  return std::find(f.isolated.begin(), f.isolated.end(), v) != f.isolated.end();
}

void expect_identities(const DecompositionReport& r) {
  EXPECT_TRUE(r.complexity_sum_ok);
  EXPECT_TRUE(r.chain_sum_ok);
  EXPECT_TRUE(r.euler_ok);
  EXPECT_TRUE(r.arrow_total_ok);
  EXPECT_TRUE(r.maximality_ok);
  EXPECT_TRUE(r.faces_ok);
  EXPECT_TRUE(r.global_ok);
  EXPECT_EQ(r.complexity_sum, 2 * static_cast<long long>(r.planar.size()));
  EXPECT_EQ(r.chain_excess_sum, static_cast<long long>(r.components) - 1);
  EXPECT_EQ(static_cast<long long>(r.n) - static_cast<long long>(r.planar.size()) + static_cast<long long>(r.faces_total),
            1 + static_cast<long long>(r.components));
  EXPECT_EQ(r.arrows.size(), 2 * r.excluded.size());
  EXPECT_FALSE(r.falsified());
}

}  // namespace

TEST(Decompose, TriangleHasTwoFaces) {
  const auto d = drawing(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}});
  const auto fs = trace_faces(d, all_edges(d.graph));
  ASSERT_EQ(fs.faces.size(), 2u);
  for (const auto& f : fs.faces) {
    EXPECT_EQ(f.complexity(), 3);
    EXPECT_EQ(f.chains(), 1);
  }
}

TEST(Decompose, TwoDisjointTriangles) {
  const auto d = drawing(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
                         {{0, 0}, {4, 0}, {0, 4}, {10, 0}, {14, 0}, {10, 4}});
  const auto fs = trace_faces(d, all_edges(d.graph));
  ASSERT_EQ(fs.faces.size(), 3u);
  EXPECT_EQ(outer_face(fs).chains(), 2);
  EXPECT_EQ(outer_face(fs).complexity(), 6);
  EXPECT_EQ(fs.components, 2u);
}

TEST(Decompose, PathIsOneFaceWithEachEdgeTwice) {
  const auto d = drawing(3, {{0, 1}, {1, 2}}, {{0, 0}, {2, 0}, {3, 2}});
  const auto fs = trace_faces(d, all_edges(d.graph));
  ASSERT_EQ(fs.faces.size(), 1u);
  EXPECT_EQ(fs.faces[0].complexity(), 4);
  EXPECT_EQ(fs.faces[0].chains(), 1);
}

TEST(Decompose, NestedTrianglesShareAnAnnulus) {
  const auto d = drawing(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
                         {{0, 0}, {30, 0}, {0, 30}, {3, 3}, {9, 3}, {3, 9}, {12, 12}});
  const auto fs = trace_faces(d, all_edges(d.graph));
  ASSERT_EQ(fs.faces.size(), 3u);
  EXPECT_EQ(outer_face(fs).chains(), 1);
  const auto annulus = std::find_if(fs.faces.begin(), fs.faces.end(), [](const Face& f) { return f.chains() == 3; });
  ASSERT_NE(annulus, fs.faces.end());
  EXPECT_EQ(annulus->complexity(), 6);
  EXPECT_EQ(annulus->isolated, (std::vector<VertexId>{6}));
  EXPECT_EQ(fs.isolated_face[6], annulus->id);
}

TEST(Decompose, MaximalPlaneSubgraphIsGreedy) {
  const auto x = x_crossing();
  EXPECT_EQ(maximal_plane_subgraph(x.graph, compute_crossings(x)), (std::vector<EdgeId>{0}));
  const auto free = drawing(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(maximal_plane_subgraph(free.graph, compute_crossings(free)), (std::vector<EdgeId>{0, 1, 2}));
}

TEST(Decompose, XCrossingGivesTwoArrowsAcrossTheSameEdge) {
  const auto x = x_crossing();
  const auto r = audit(x, 2);
  EXPECT_EQ(r.planar, (std::vector<EdgeId>{0}));
  EXPECT_EQ(r.excluded, (std::vector<EdgeId>{1}));
  ASSERT_EQ(r.arrows.size(), 2u);
  EXPECT_EQ(r.arrows[0].exit, 0u);
  EXPECT_EQ(r.arrows[1].exit, 0u);
  EXPECT_NE(r.arrows[0].start, r.arrows[1].start);
  EXPECT_EQ(r.same_face_edges, 1u);
  expect_identities(r);
}

TEST(Decompose, QuadExtremalEightEveryTriangleHasOneArrow) {
  const auto r = audit(gen_quad_extremal(8), 2);
  EXPECT_EQ(r.planar.size(), 18u);
  EXPECT_EQ(r.excluded.size(), 6u);
  EXPECT_EQ(r.faces.size(), 12u);
  for (const auto& f : r.faces) {
    EXPECT_EQ(f.complexity, 3);
    EXPECT_EQ(f.chains, 1);
    EXPECT_EQ(f.arrows, 1);
    EXPECT_EQ(f.bound, 1);
  }
  expect_identities(r);
}

TEST(Decompose, CompleteSixArrowsTwicePerExcludedEdge) {
  const auto r = audit(gen_straight_extremal(6), 2);
  EXPECT_EQ(r.arrows.size(), 2 * r.excluded.size());
  EXPECT_EQ(r.planar.size() + r.excluded.size(), 15u);
  expect_identities(r);
}

TEST(Decompose, CrossingFreeDrawingHasNoArrows) {
  const auto d = drawing(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const auto r = audit(d, 2);
  EXPECT_TRUE(r.excluded.empty());
  for (const auto& f : r.faces) EXPECT_EQ(f.arrows, 0);
  expect_identities(r);
}

TEST(Decompose, FaceBoundFormulas) {
  EXPECT_EQ(face_bound(3, 1, 2), 1);
  EXPECT_EQ(face_bound(4, 1, 2), 4);
  EXPECT_EQ(face_bound(6, 2, 2), 18);
  EXPECT_EQ(face_bound(3, 1, 3), 3);
  EXPECT_EQ(face_bound(4, 1, 4), 3 * 3 * 2 - 8 + 3);
}

TEST(Decompose, AuditRejectsBadInput) {
  EXPECT_THROW(audit(fan_fixture(), 2), DomainError);
  EXPECT_THROW(audit(drawing(2, {{0, 1}}, {{0, 0}, {1, 0}}), 2), DomainError);
  AbstractDrawing bare;
  bare.graph = Graph(4, {{0, 1}});
  EXPECT_THROW(audit(bare, 2), UnsupportedError);
}

TEST(Decompose, EmbeddedAbstractDrawingMatchesCoordinates) {
  for (int n : {6, 8, 11, 15}) {
    const auto d = gen_straight_extremal(n);
    const auto a = audit(d, 2);
    const auto b = audit(to_abstract(d), 2);
    EXPECT_EQ(a.planar, b.planar);
    EXPECT_EQ(a.excluded, b.excluded);
    EXPECT_EQ(a.faces_total, b.faces_total);
    EXPECT_EQ(a.complexity_sum, b.complexity_sum);
    ASSERT_EQ(a.arrows.size(), b.arrows.size());
    for (std::size_t i = 0; i < a.arrows.size(); ++i) {
      EXPECT_EQ(a.arrows[i].exit, b.arrows[i].exit);
      EXPECT_EQ(a.arrows[i].start, b.arrows[i].start);
    }
  }
}

TEST(Decompose, QuadExtremalAuditsAcrossSizes) {
  for (int n : {8, 10, 11, 12, 17, 24}) {
    const auto r = audit(gen_quad_extremal(n), 2);
    expect_identities(r);
    EXPECT_EQ(r.global_lhs, r.global_bound) << n;
  }
}

TEST(DecomposeProperty, RandomFanFreeDrawingsPassTheAudit) {
  tools::Rng rng(31);
  for (int iter = 0; iter < 120; ++iter) {
    const int k = 2 + iter % 3;
    const int n = static_cast<int>(tools::uniform(rng, 3, 12));
    const auto d = tools::random_fan_free_drawing(rng, n, k, 40, 20);
    const auto r = audit(d, k);
    expect_identities(r);

    const auto c = compute_crossings(d);
    for (auto e : r.excluded) {
      const bool crosses_h =
          std::any_of(r.planar.begin(), r.planar.end(), [&](EdgeId h) { return c.contains(e, h); });
      EXPECT_TRUE(crosses_h);
    }
    const auto fs = trace_faces(d, r.planar);
    for (const auto& a : r.arrows) {
      EXPECT_TRUE(on_boundary(fs.faces[static_cast<std::size_t>(a.face)], a.start));
      EXPECT_TRUE(c.contains(a.edge, a.exit));
    }
  }
}
