#pragma once

#include "fanfree/drawing.hpp"
#include "fanfree/star.hpp"

#include <vector>

namespace fanfree::tools {

/// crossing pairs by solving each segment pair parametrically in rationals
CrossingRelation naive_crossings(const StraightLineDrawing& d);

/// witnesses by enumerating every (crosser, apex, k-subset of apex edges) tuple
std::vector<FanWitness> naive_k_fans(const Graph& g, const CrossingRelation& c, int k);

/// fan-freeness of a star checked on an exact convex realization with straight segments
bool geometric_star_fan_free(const StarConfig& s, int k);

/// pairs of crossing arrows in that realization
std::vector<std::pair<std::size_t, std::size_t>> geometric_star_crossings(const StarConfig& s);

/// maximum over every multiset of (start, exit) pairs and every slot order; tiny m only
int brute_force_max_arrows(int m, int k, bool long_only);

}  // namespace fanfree::tools
