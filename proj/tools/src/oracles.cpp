#include "fanfree_tools/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fanfree::tools {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

// proper intersection of segments pq and rs, interior to both
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Rational dx1 = q.x - p.x, dy1 = q.y - p.y;
  const Rational dx2 = s.x - r.x, dy2 = s.y - r.y;
  const Rational den = cross(dx1, dy1, dx2, dy2);
  if (den == 0) return false;
  const Rational t = cross(r.x - p.x, r.y - p.y, dx2, dy2) / den;
  const Rational u = cross(r.x - p.x, r.y - p.y, dx1, dy1) / den;
  return t > 0 && t < 1 && u > 0 && u < 1;
}

}  // namespace

CrossingRelation naive_crossings(const StraightLineDrawing& d) {
  std::vector<EdgePair> pairs;
  const auto& g = d.graph;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    for (EdgeId j = i + 1; j < g.edge_count(); ++j) {
      const auto& a = g.edge(i);
      const auto& b = g.edge(j);
      if (a.shares_endpoint(b)) continue;
      if (segments_cross(d.coords[a.u], d.coords[a.v], d.coords[b.u], d.coords[b.v])) pairs.emplace_back(i, j);
    }
  }
  return CrossingRelation(std::move(pairs));
}

std::vector<FanWitness> naive_k_fans(const Graph& g, const CrossingRelation& c, int k) {
  std::vector<FanWitness> out;
  for (EdgeId crosser = 0; crosser < g.edge_count(); ++crosser) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.edge(crosser).incident(v)) continue;
      std::vector<EdgeId> at_v;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).incident(v)) at_v.push_back(e);
      }
      if (at_v.size() < static_cast<std::size_t>(k)) continue;
      // lexicographic walk over k-subsets; the first fully crossed subset is the witness
      std::vector<std::size_t> idx(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      while (true) {
        const bool all = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return c.contains(crosser, at_v[i]); });
        if (all) {
          FanWitness w{crosser, v, {}};
          for (std::size_t i : idx) w.fan.push_back(at_v[i]);
          out.push_back(std::move(w));
          break;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == at_v.size() - static_cast<std::size_t>(k - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  return out;
}

namespace {

struct StarGeometry {
  std::vector<Point> corner;
  std::vector<Point> end;
};

StarGeometry realize(const StarConfig& s) {
  const int m = s.m();
  StarGeometry geo;
  // a strictly convex polygon: points on the parabola y = x^2
  for (int i = 0; i < m; ++i) geo.corner.emplace_back(i, static_cast<long long>(i) * i);
  std::map<int, int> per_edge;
  for (const auto& a : s.arrows()) ++per_edge[a.exit];
  for (const auto& a : s.arrows()) {
    const Point& p = geo.corner[static_cast<std::size_t>(a.exit)];
    const Point& q = geo.corner[static_cast<std::size_t>((a.exit + 1) % m)];
    const Rational t(BigInt(a.slot + 1), BigInt(per_edge[a.exit] + 1));
    geo.end.emplace_back(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
  }
  return geo;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> geometric_star_crossings(const StarConfig& s) {
  const auto geo = realize(s);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const auto& x = s.arrow(a);
      const auto& y = s.arrow(b);
      if (x.start == y.start) continue;
      if (segments_cross(geo.corner[static_cast<std::size_t>(x.start)], geo.end[a],
                         geo.corner[static_cast<std::size_t>(y.start)], geo.end[b])) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

bool geometric_star_fan_free(const StarConfig& s, int k) {
  const int m = s.m();
  const auto crossing = geometric_star_crossings(s);
  std::vector<std::vector<std::size_t>> crossed(s.size());
  for (const auto& [a, b] : crossing) {
    crossed[a].push_back(b);
    crossed[b].push_back(a);
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::map<int, int> per_vertex;
    ++per_vertex[s.arrow(a).exit];
    ++per_vertex[(s.arrow(a).exit + 1) % m];
    for (std::size_t b : crossed[a]) ++per_vertex[s.arrow(b).start];
    for (const auto& [v, count] : per_vertex) {
      if (count >= k) return false;
    }
  }
  std::map<std::pair<int, int>, int> on_edge;
  for (const auto& a : s.arrows()) {
    if (++on_edge[{a.exit, a.start}] >= k) return false;
  }
  return true;
}

int brute_force_max_arrows(int m, int k, bool long_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < m; ++s) {
    for (int j = 0; j < m; ++j) {
      if (!legal_arrow(m, s, j)) continue;
      const int fwd = ((j - s) % m + m) % m;
      if (long_only && std::min(fwd, m - 1 - fwd) < 2) continue;
      pairs.emplace_back(s, j);
    }
  }
  int best = 0;
  std::vector<int> mult(pairs.size(), 0);
  // every slot order on every edge, for one multiset of arrows
  auto some_order_fan_free = [&](const std::vector<Arrow>& base) {
    std::map<int, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < base.size(); ++i) by_edge[base[i].exit].push_back(i);
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [j, ids] : by_edge) {
      groups.push_back(ids);
      std::vector<int> p(ids.size());
      for (std::size_t r = 0; r < p.size(); ++r) p[r] = static_cast<int>(r);
      perms.push_back(p);
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
      if (gi == groups.size()) {
        std::vector<Arrow> arrows = base;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          for (std::size_t r = 0; r < groups[g].size(); ++r) arrows[groups[g][r]].slot = perms[g][r];
        }
        return is_fan_free(StarConfig(m, arrows), k);
      }
      std::sort(perms[gi].begin(), perms[gi].end());
      do {
        if (rec(gi + 1)) return true;
      } while (std::next_permutation(perms[gi].begin(), perms[gi].end()));
      return false;
    };
    return rec(0);
  };
  std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int total) {
    if (i == pairs.size()) {
      if (total <= best) return;
      std::vector<Arrow> arrows;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (int r = 0; r < mult[p]; ++r) arrows.push_back({pairs[p].first, pairs[p].second, 0});
      }
      if (some_order_fan_free(arrows)) best = total;
      return;
    }
    for (int mu = 0; mu < k; ++mu) {
      mult[i] = mu;
      dfs(i + 1, total + mu);
    }
    mult[i] = 0;
  };
  dfs(0, 0);
  return best;
}

}  // namespace fanfree::tools
