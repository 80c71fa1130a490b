#include "fanfree/error.hpp"
#include "fanfree/star.hpp"
#include "fanfree_tools/oracles.hpp"
#include "fanfree_tools/random_drawings.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace fanfree;

namespace {

using Kind = CyclePoint::Kind;

CyclePoint vtx(int i) { return {Kind::vertex, i}; }
CyclePoint end(int a) { return {Kind::endpoint, a}; }

StarConfig rotate(const StarConfig& s, int shift) {
  std::vector<Arrow> out;
  for (const auto& a : s.arrows()) out.push_back({(a.start + shift) % s.m(), (a.exit + shift) % s.m(), a.slot});
  return StarConfig(s.m(), out);
}

StarConfig reflect(const StarConfig& s) {
  const int m = s.m();
  std::map<int, int> per_edge;
  for (const auto& a : s.arrows()) ++per_edge[a.exit];
  std::vector<Arrow> out;
  for (const auto& a : s.arrows()) {
    out.push_back({(m - a.start) % m, ((2 * m) - a.exit - 1) % m, per_edge[a.exit] - 1 - a.slot});
  }
  return StarConfig(m, out);
}

StarConfig without(const StarConfig& s, std::size_t drop) {
  std::vector<Arrow> out;
  const auto& gone = s.arrow(drop);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == drop) continue;
    auto a = s.arrow(i);
    if (a.exit == gone.exit && a.slot > gone.slot) --a.slot;
    out.push_back(a);
  }
  return StarConfig(s.m(), out);
}

StarConfig random_star(tools::Rng& rng, int m, int arrows) {
  std::vector<Arrow> out;
  std::map<int, int> per_edge;
  while (static_cast<int>(out.size()) < arrows) {
    const int s = static_cast<int>(tools::uniform(rng, 0, m - 1));
    const int j = static_cast<int>(tools::uniform(rng, 0, m - 1));
    if (!legal_arrow(m, s, j)) continue;
    out.push_back({s, j, per_edge[j]++});
  }
  // shuffle slot order on every edge
  for (auto& [edge, count] : per_edge) {
    std::vector<int> perm(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& a : out) {
      if (a.exit == edge) a.slot = perm[static_cast<std::size_t>(a.slot)];
    }
  }
  return StarConfig(m, out);
}

std::vector<StarConfig> fan_free_samples(int k) {
  std::vector<StarConfig> out;
  SearchOptions o;
  o.max_witnesses = 64;
  for (int m = 4; m <= 7; ++m) {
    for (auto& s : max_arrows(m, k, SearchFilter::all(), o).extremal) out.push_back(s);
  }
  tools::Rng rng(21);
  while (out.size() < 400) {
    const int m = static_cast<int>(tools::uniform(rng, 3, 8));
    auto s = random_star(rng, m, static_cast<int>(tools::uniform(rng, 1, m)));
    if (is_fan_free(s, k)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST(Star, RefinedCycle) {
  EXPECT_EQ(refined_cycle(StarConfig(3, {})), (std::vector<CyclePoint>{vtx(0), vtx(1), vtx(2)}));
  EXPECT_EQ(refined_cycle(StarConfig(3, {{0, 1, 0}})), (std::vector<CyclePoint>{vtx(0), vtx(1), end(0), vtx(2)}));
  EXPECT_EQ(refined_cycle(StarConfig(4, {{0, 1, 0}, {1, 2, 0}})),
            (std::vector<CyclePoint>{vtx(0), vtx(1), end(0), vtx(2), end(1), vtx(3)}));
}

TEST(Star, SlotsOrderEndpointsAlongAnEdge) {
  const StarConfig s(5, {{0, 2, 1}, {4, 2, 0}});
  EXPECT_EQ(refined_cycle(s), (std::vector<CyclePoint>{vtx(0), vtx(1), vtx(2), end(1), end(0), vtx(3), vtx(4)}));
}

TEST(Star, ArrowsCross) {
  const StarConfig forced(3, {{0, 1, 0}, {1, 2, 0}});
  EXPECT_TRUE(arrows_cross(forced, 0, 1));
  const StarConfig same_start(5, {{0, 2, 0}, {0, 3, 0}});
  EXPECT_FALSE(arrows_cross(same_start, 0, 1));
  const StarConfig apart(6, {{0, 2, 0}, {3, 5, 0}});
  EXPECT_FALSE(arrows_cross(apart, 0, 1));
}

TEST(Star, FanFreeness) {
  EXPECT_TRUE(is_fan_free(StarConfig(3, {{0, 1, 0}}), 2));
  EXPECT_FALSE(is_fan_free(StarConfig(3, {{0, 1, 0}, {1, 2, 0}}), 2));
  EXPECT_TRUE(is_fan_free(StarConfig(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}), 3));
  // two copies of one arrow are fanned by their exit edge when k = 2
  const auto twins = StarConfig::from_pairs(5, {{0, 2}, {0, 2}});
  EXPECT_FALSE(is_fan_free(twins, 2));
  EXPECT_TRUE(is_fan_free(twins, 3));
}

TEST(Star, ArrowLengthAndWitness) {
  EXPECT_EQ(arrow_length(StarConfig(5, {{0, 1, 0}}), 0), 1);
  EXPECT_EQ(arrow_length(StarConfig(7, {{0, 2, 0}}), 0), 2);
  for (int s = 0; s < 4; ++s) {
    for (int j = 0; j < 4; ++j) {
      if (legal_arrow(4, s, j)) EXPECT_EQ(arrow_length(StarConfig(4, {{s, j, 0}}), 0), 1);
    }
  }
  EXPECT_EQ(short_arrow_witness(StarConfig(5, {{0, 1, 0}}), 0), 1);
  EXPECT_EQ(short_arrow_witness(StarConfig(5, {{2, 3, 0}}), 0), 3);
  EXPECT_EQ(short_arrow_witness(StarConfig(5, {{2, 0, 0}}), 0), 1);
  EXPECT_THROW(short_arrow_witness(StarConfig(5, {{0, 2, 0}}), 0), DomainError);
}

TEST(Star, Validation) {
  EXPECT_FALSE(legal_arrow(5, 2, 2));
  EXPECT_FALSE(legal_arrow(5, 2, 1));
  EXPECT_TRUE(legal_arrow(5, 2, 3));
  EXPECT_TRUE(validate_star(StarConfig(5, {{2, 1, 0}})).has_value());
  EXPECT_TRUE(validate_star(StarConfig(5, {{0, 2, 0}, {1, 3, 0}, {4, 2, 0}})).has_value());
  EXPECT_FALSE(validate_star(StarConfig(5, {{0, 2, 1}, {4, 2, 0}})).has_value());
}

TEST(Star, ClassificationAllHeavy) {
  const auto c = classify_vertices(StarConfig(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}));
  EXPECT_EQ(c.counts, (ClassCounts{3, 0, 0}));
}

TEST(Star, ClassificationLeftLightRun) {
  const auto c = classify_vertices(StarConfig(4, {{0, 2, 0}}));
  EXPECT_EQ(c.counts, (ClassCounts{1, 3, 0}));
  EXPECT_EQ(c.tags[1], VertexTag::left_light);
}

TEST(Star, ClassificationWitnessedFromBothSidesIsVoid) {
  // v1 witnesses a short arrow from each neighbour; v3 is unwitnessed from the left
  const auto c = classify_vertices(StarConfig(4, {{0, 1, 0}, {2, 0, 0}}));
  EXPECT_EQ(c.tags[1], VertexTag::void_vertex);
  EXPECT_EQ(c.tags[3], VertexTag::left_light);
  EXPECT_EQ(c.counts, (ClassCounts{2, 1, 1}));
}

TEST(Star, ClassificationRunEndsInOneVoidVertex) {
  const auto c = classify_vertices(StarConfig(5, {{0, 1, 0}, {4, 2, 0}}));
  EXPECT_EQ(c.tags[1], VertexTag::right_light);
  EXPECT_EQ(c.tags[2], VertexTag::right_light);
  EXPECT_EQ(c.tags[3], VertexTag::void_vertex);
  EXPECT_EQ(c.counts, (ClassCounts{2, 2, 1}));
}

TEST(Star, ClassificationRightLight) {
  const auto c = classify_vertices(StarConfig(5, {{0, 1, 0}, {2, 0, 0}}));
  EXPECT_EQ(c.tags[1], VertexTag::void_vertex);
  const auto d = classify_vertices(StarConfig(5, {{0, 1, 0}, {3, 4, 0}}));
  EXPECT_EQ(d.tags[1], VertexTag::right_light);
  EXPECT_EQ(d.tags[2], VertexTag::right_light);
  EXPECT_EQ(d.tags[4], VertexTag::right_light);
  EXPECT_EQ(d.counts, (ClassCounts{2, 3, 0}));
}

TEST(Star, ClassificationOfEmptyStar) {
  EXPECT_EQ(classify_vertices(StarConfig(4, {})).counts, (ClassCounts{0, 4, 0}));
}

TEST(StarProperty, ClassificationInvariants) {
  tools::Rng rng(22);
  for (int iter = 0; iter < 500; ++iter) {
    const int m = static_cast<int>(tools::uniform(rng, 3, 8));
    const auto s = random_star(rng, m, static_cast<int>(tools::uniform(rng, 0, m)));
    const auto c = classify_vertices(s);
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    std::map<std::pair<int, int>, int> a;
    for (const auto& x : s.arrows()) {
      ++deg[static_cast<std::size_t>(x.start)];
      ++a[{x.start, x.exit}];
    }
    EXPECT_EQ(c.counts.heavy + c.counts.light + c.counts.void_count, m);
    for (int i = 0; i < m; ++i) {
      const auto t = c.tags[static_cast<std::size_t>(i)];
      EXPECT_EQ(t == VertexTag::heavy, deg[static_cast<std::size_t>(i)] > 0);
      if (t == VertexTag::left_light) EXPECT_EQ((a[{(i + m - 1) % m, i}]), 0);
      if (t == VertexTag::right_light) EXPECT_EQ((a[{(i + 1) % m, (i + m - 1) % m}]), 0);
      const auto next = c.tags[static_cast<std::size_t>((i + 1) % m)];
      EXPECT_FALSE(t == VertexTag::left_light && next == VertexTag::right_light);
      EXPECT_FALSE(t == VertexTag::right_light && next == VertexTag::left_light);
    }
  }
}

TEST(StarSearch, ExactSmallValues) {
  EXPECT_EQ(max_arrows(3, 2, SearchFilter::all()).maximum, 1);
  EXPECT_EQ(max_arrows(4, 2, SearchFilter::all()).maximum, 2);
  EXPECT_EQ(max_arrows(3, 3, SearchFilter::with_class(3, 0, 0)).maximum, 3);
}

TEST(StarSearch, ProbeStaysBetweenTheBounds) {
  for (int m = 4; m <= 7; ++m) {
    const auto r = max_arrows(m, 2, SearchFilter::all());
    EXPECT_GE(r.maximum, 2 * m - 6) << m;
    EXPECT_LE(r.maximum, 3 * m - 9) << m;
    const auto longs = max_arrows(m, 2, SearchFilter::long_only());
    EXPECT_LE(longs.maximum, std::max(0, 2 * m - 8)) << m;
  }
  EXPECT_LE(max_arrows(5, 2, SearchFilter::long_only()).maximum, 2);
}

TEST(StarSearch, ExtremalConfigurationsAreValid) {
  const auto r = max_arrows(6, 2, SearchFilter::all(), {2'000'000'000ULL, 8});
  ASSERT_FALSE(r.extremal.empty());
  for (const auto& s : r.extremal) {
    EXPECT_FALSE(validate_star(s).has_value());
    EXPECT_TRUE(is_fan_free(s, 2));
    EXPECT_EQ(static_cast<int>(s.size()), r.maximum);
  }
}

TEST(StarSearch, MatchesBruteForceOverAllSlotOrders) {
  for (int m = 3; m <= 5; ++m) {
    EXPECT_EQ(max_arrows(m, 2, SearchFilter::all()).maximum, tools::brute_force_max_arrows(m, 2, false)) << m;
    EXPECT_EQ(max_arrows(m, 2, SearchFilter::long_only()).maximum, tools::brute_force_max_arrows(m, 2, true)) << m;
  }
  for (int m = 3; m <= 4; ++m) {
    EXPECT_EQ(max_arrows(m, 3, SearchFilter::all()).maximum, tools::brute_force_max_arrows(m, 3, false)) << m;
  }
}

TEST(StarSearch, BudgetExhaustionIsInconclusive) {
  EXPECT_THROW(max_arrows(6, 2, SearchFilter::all(), {1, 1}), InconclusiveError);
}

TEST(StarSearch, DomainErrors) {
  EXPECT_THROW(max_arrows(2, 2, SearchFilter::all()), DomainError);
  EXPECT_THROW(max_arrows(4, 1, SearchFilter::all()), DomainError);
  EXPECT_THROW(max_arrows(4, 3, SearchFilter::with_class(2, 1, 0)), DomainError);
}

TEST(StarSearch, BoundB) {
  EXPECT_EQ(bound_B(3, 0, 0, 3), 3);
  EXPECT_EQ(bound_B(2, 2, 0, 3), 5);
  EXPECT_EQ(bound_B(2, 0, 1, 3), 2);
  EXPECT_THROW(bound_B(1, 2, 0, 3), DomainError);
  EXPECT_THROW(bound_B(3, 0, 0, 2), DomainError);
}

TEST(StarSearch, BaseCaseClosedForms) {
  EXPECT_EQ(base_case_value({3, 0, 0}, 3), 3);
  EXPECT_EQ(base_case_value({2, 0, 1}, 3), 2);
  EXPECT_EQ(base_case_value({2, 1, 0}, 3), 2);
  EXPECT_EQ(base_case_value({4, 0, 0}, 3), 6);
  EXPECT_EQ(base_case_value({2, 2, 0}, 3), 4);
}

TEST(StarSearch, BaseCaseSearchValues) {
  EXPECT_EQ(max_arrows(3, 3, SearchFilter::with_class(2, 0, 1)).maximum, 2);
  EXPECT_EQ(max_arrows(4, 3, SearchFilter::with_class(4, 0, 0)).maximum, 6);
  const auto rows = verify_base_cases(3);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& r : rows) EXPECT_TRUE(r.within_bound) << r.cls.heavy << r.cls.light << r.cls.void_count;
}

TEST(StarSearch, TriangleWithTwoHeavyVerticesHasNoLightVertex) {
  // each heavy vertex of a triangle can only exit through an edge at the third vertex
  const auto r = max_arrows(3, 3, SearchFilter::with_class(2, 1, 0));
  EXPECT_FALSE(r.feasible);
}

TEST(StarProperty, GeometricRealizationAgrees) {
  tools::Rng rng(23);
  for (int iter = 0; iter < 400; ++iter) {
    const int m = static_cast<int>(tools::uniform(rng, 3, 7));
    const auto s = random_star(rng, m, static_cast<int>(tools::uniform(rng, 1, 2 * m)));
    std::vector<std::pair<std::size_t, std::size_t>> combinatorial;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (arrows_cross(s, a, b)) combinatorial.emplace_back(a, b);
      }
    }
    ASSERT_EQ(tools::geometric_star_crossings(s), combinatorial) << "iteration " << iter;
    for (int k = 2; k <= 3; ++k) {
      ASSERT_EQ(tools::geometric_star_fan_free(s, k), is_fan_free(s, k)) << "iteration " << iter << " k=" << k;
    }
  }
}

TEST(StarProperty, SubsetsOfFanFreeConfigurationsAreFanFree) {
  for (const auto& s : fan_free_samples(2)) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto t = without(s, i);
      ASSERT_FALSE(validate_star(t).has_value());
      EXPECT_TRUE(is_fan_free(t, 2));
    }
  }
}

TEST(StarProperty, WitnessesAreUniqueAndIdle) {
  for (const auto& s : fan_free_samples(2)) {
    std::map<int, int> witnessed;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_short(s, i)) ++witnessed[short_arrow_witness(s, i)];
    }
    for (const auto& [w, count] : witnessed) {
      if (s.m() == 3) continue;  // both chains of a triangle arrow have length one
      EXPECT_EQ(count, 1) << "vertex " << w;
      for (const auto& a : s.arrows()) EXPECT_NE(a.start, w);
    }
  }
}

TEST(StarProperty, RotationAndReflectionPreserveEverything) {
  for (const auto& s : fan_free_samples(2)) {
    const auto r = reflect(s);
    ASSERT_FALSE(validate_star(r).has_value());
    EXPECT_TRUE(is_fan_free(r, 2));
    for (int shift = 1; shift < s.m(); ++shift) {
      const auto t = rotate(s, shift);
      EXPECT_TRUE(is_fan_free(t, 2));
      const auto c = classify_vertices(t).counts;
      EXPECT_EQ(c, classify_vertices(s).counts);
    }
  }
  tools::Rng rng(24);
  for (int iter = 0; iter < 300; ++iter) {
    const int m = static_cast<int>(tools::uniform(rng, 3, 7));
    const auto s = random_star(rng, m, static_cast<int>(tools::uniform(rng, 1, 2 * m)));
    for (int k = 2; k <= 3; ++k) {
      EXPECT_EQ(is_fan_free(reflect(s), k), is_fan_free(s, k));
      EXPECT_EQ(is_fan_free(rotate(s, 1), k), is_fan_free(s, k));
    }
  }
}

TEST(StarProperty, MaximumIsInvariantUnderRelabeling) {
  for (int m = 4; m <= 6; ++m) {
    const auto r = max_arrows(m, 2, SearchFilter::all(), {2'000'000'000ULL, 64});
    for (const auto& s : r.extremal) {
      EXPECT_EQ(static_cast<int>(reflect(s).size()), r.maximum);
      EXPECT_TRUE(is_fan_free(reflect(s), 2));
      EXPECT_TRUE(is_fan_free(rotate(s, m - 1), 2));
    }
  }
}

TEST(StarSearch, BaseCaseWitnessesAreRealizable) {
  for (const auto& r : verify_base_cases(3)) {
    if (!r.witness) continue;
    EXPECT_TRUE(tools::geometric_star_fan_free(*r.witness, 3));
    EXPECT_EQ(classify_vertices(*r.witness).counts, r.cls);
    EXPECT_EQ(static_cast<int>(r.witness->size()), r.searched);
  }
}
