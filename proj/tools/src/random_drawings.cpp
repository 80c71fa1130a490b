#include "fanfree_tools/random_drawings.hpp"

#include "fanfree/crossings.hpp"
#include "fanfree/geometry.hpp"

#include <algorithm>

namespace fanfree::tools {

long long uniform(Rng& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

std::vector<Point> random_points(Rng& rng, int n, int range) {
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const long long den = uniform(rng, 1, 3);
    Point p(make_rational(uniform(rng, -range * den, range * den), den),
            make_rational(uniform(rng, -range * den, range * den), den));
    bool ok = std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return q == p; });
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j) {
        if (orientation(pts[i], pts[j], p) == 0) ok = false;
      }
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

StraightLineDrawing random_simple_drawing(Rng& rng, int n, int max_edges, int range) {
  StraightLineDrawing d;
  d.provenance = "random";
  d.coords = random_points(rng, n, range);
  d.graph = Graph(static_cast<std::size_t>(n));
  const int possible = n * (n - 1) / 2;
  const int target = static_cast<int>(uniform(rng, 0, std::min(max_edges, possible)));
  while (static_cast<int>(d.graph.edge_count()) < target) {
    const auto a = static_cast<VertexId>(uniform(rng, 0, n - 1));
    const auto b = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (a == b || d.graph.find_edge(a, b)) continue;
    d.graph.add_edge(a, b);
  }
  return d;
}

StraightLineDrawing random_fan_free_drawing(Rng& rng, int n, int k, int attempts, int range) {
  StraightLineDrawing d;
  d.provenance = "random-fan-free(k=" + std::to_string(k) + ")";
  d.coords = random_points(rng, n, range);
  d.graph = Graph(static_cast<std::size_t>(n));
  for (int t = 0; t < attempts; ++t) {
    const auto a = static_cast<VertexId>(uniform(rng, 0, n - 1));
    const auto b = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (a == b || d.graph.find_edge(a, b)) continue;
    StraightLineDrawing next = d;
    next.graph.add_edge(a, b);
    if (is_k_fan_free(next, k)) d = std::move(next);
  }
  return d;
}

}  // namespace fanfree::tools
