#include "fanfree/constructions.hpp"

#include "fanfree/bounds.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/error.hpp"
#include "fanfree/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace fanfree {

namespace {

using Quad = std::array<VertexId, 4>;

// faces are listed with the face on the left of every directed side
AbstractDrawing build_quad_extremal(int n, const std::vector<Quad>& faces, const std::string& provenance) {
  Graph g(static_cast<std::size_t>(n));
  std::map<std::pair<VertexId, VertexId>, int> directed;
  for (const auto& f : faces) {
    for (int i = 0; i < 4; ++i) {
      const VertexId a = f[static_cast<std::size_t>(i)];
      const VertexId b = f[static_cast<std::size_t>((i + 1) % 4)];
      if (++directed[{a, b}] > 1) throw ContractError("quadrangulation side used twice");
      if (!g.find_edge(a, b)) g.add_edge(a, b);
    }
  }
  for (const auto& [side, count] : directed) {
    if (!directed.count({side.second, side.first})) throw ContractError("quadrangulation side without its twin");
  }
  const std::size_t skeleton = g.edge_count();
  const auto faces_count = static_cast<long long>(faces.size());
  if (static_cast<long long>(n) - static_cast<long long>(skeleton) + faces_count != 2) {
    throw ContractError("quadrangulation violates Euler's formula");
  }
  if (skeleton != quad_skeleton_edges(n)) throw ContractError("quadrangulation has the wrong edge count");

  std::vector<EdgePair> crossing_pairs;
  std::vector<std::array<EdgeId, 2>> diag(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    diag[i][0] = g.add_edge(f[0], f[2]);
    diag[i][1] = g.add_edge(f[1], f[3]);
    crossing_pairs.emplace_back(diag[i][0], diag[i][1]);
  }
  if (auto bad = validate_graph(g)) throw ContractError("quad-extremal graph is not simple: " + bad->message);

  // rotation: around v, the face holding sides p->v and v->s sits between s and p
  std::vector<std::map<VertexId, std::pair<VertexId, std::size_t>>> ccw_next(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    for (int c = 0; c < 4; ++c) {
      const VertexId p = f[static_cast<std::size_t>((c + 3) % 4)];
      const VertexId v = f[static_cast<std::size_t>(c)];
      const VertexId s = f[static_cast<std::size_t>((c + 1) % 4)];
      ccw_next[v][s] = {p, i};
    }
  }
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    const auto& next = ccw_next[v];
    if (next.empty()) throw ContractError("vertex outside the quadrangulation");
    VertexId s = next.begin()->first;
    std::size_t steps = 0;
    do {
      const auto [p, face] = next.at(s);
      emb.rotation[v].push_back(*g.find_edge(v, s));
      const auto& f = faces[face];
      const std::size_t c = static_cast<std::size_t>(std::find(f.begin(), f.end(), v) - f.begin());
      emb.rotation[v].push_back(diag[face][c % 2]);
      s = p;
      ++steps;
    } while (s != next.begin()->first && steps <= next.size());
    if (steps != next.size()) throw ContractError("rotation at a vertex is not a single cycle");
  }
  emb.crossing_order.resize(g.edge_count());
  for (const auto& [a, b] : crossing_pairs) {
    emb.crossing_order[a].push_back(b);
    emb.crossing_order[b].push_back(a);
  }

  AbstractDrawing d;
  d.graph = std::move(g);
  d.crossings = CrossingRelation(crossing_pairs);
  d.provenance = provenance;
  d.embedding = std::move(emb);

  std::vector<EdgeId> skel(skeleton);
  std::iota(skel.begin(), skel.end(), 0);
  if (!two_coloring(d.graph, skel)) throw ContractError("quadrangulation is not bipartite");
  if (auto fans = find_k_fans(d.graph, d.crossings, 2); !fans.empty()) {
    throw FalsificationError("quad-extremal construction contains a fan crossing");
  }
  return d;
}

}  // namespace

AbstractDrawing gen_quad_extremal(int n) {
  if (n < 8) {
    const std::string why = n >= 3 ? exact_extremal_k2(n).reason : std::string("n must be at least 3");
    throw DomainError("no fan-crossing free graph with 4n-8 edges for n = " + std::to_string(n) + ": " + why);
  }
  if (n == 9) {
    throw DomainError("no fan-crossing free graph with 4n-8 edges for n = 9: " + exact_extremal_k2(9).reason);
  }
  const std::string prov = "quad-extremal(n=" + std::to_string(n) + ")";
  std::vector<Quad> faces;
  if (n == 8) {
    // nested squares a0..a3 (outer) and b0..b3 (inner)
    auto a = [](int i) { return static_cast<VertexId>(i % 4); };
    auto b = [](int i) { return static_cast<VertexId>(4 + i % 4); };
    faces.push_back({b(0), b(1), b(2), b(3)});
    for (int i = 0; i < 4; ++i) faces.push_back({a(i), a(i + 1), b(i + 1), b(i)});
    faces.push_back({a(0), a(3), a(2), a(1)});
    return build_quad_extremal(n, faces, prov);
  }
  if (n % 2 == 0) {
    const int t = (n - 2) / 2;
    const VertexId north = 0;
    const VertexId south = 1;
    auto u = [t](int i) { return static_cast<VertexId>(2 + 2 * (((i - 1) % t + t) % t)); };
    auto w = [t](int i) { return static_cast<VertexId>(3 + 2 * (((i - 1) % t + t) % t)); };
    for (int i = 1; i <= t; ++i) faces.push_back({north, u(i), w(i), u(i + 1)});
    for (int i = 1; i <= t; ++i) faces.push_back({south, w(i + 1), u(i + 1), w(i)});
    return build_quad_extremal(n, faces, prov);
  }
  // odd n: the even construction on n-1 vertices with its north pole split in two
  const int t = (n - 3) / 2;
  const int j = 3;
  const VertexId north1 = 0;
  const VertexId north2 = 1;
  const VertexId south = 2;
  auto u = [t](int i) { return static_cast<VertexId>(3 + 2 * (((i - 1) % t + t) % t)); };
  auto w = [t](int i) { return static_cast<VertexId>(4 + 2 * (((i - 1) % t + t) % t)); };
  for (int i = 1; i <= t; ++i) faces.push_back({i < j ? north1 : north2, u(i), w(i), u(i + 1)});
  for (int i = 1; i <= t; ++i) faces.push_back({south, w(i + 1), u(i + 1), w(i)});
  faces.push_back({north1, u(j), north2, u(1)});
  return build_quad_extremal(n, faces, prov);
}

namespace {

struct PlaneBuilder {
  std::vector<Point> coords;
  Graph graph;
  std::vector<Quad> quads;

  VertexId add_vertex(long long x, long long y) {
    coords.emplace_back(x, y);
    graph = Graph(coords.size(), graph.edges());
    return static_cast<VertexId>(coords.size() - 1);
  }
  void edge(VertexId a, VertexId b) { graph.add_edge(a, b); }
};

StraightLineDrawing finish_with_diagonals(PlaneBuilder& pb, const std::string& provenance) {
  std::vector<EdgePair> expected;
  for (const auto& q : pb.quads) {
    std::array<Point, 4> poly{pb.coords[q[0]], pb.coords[q[1]], pb.coords[q[2]], pb.coords[q[3]]};
    std::array<Point, 4> rev{poly[3], poly[2], poly[1], poly[0]};
    if (!strictly_convex_ccw(std::span<const Point>(poly)) && !strictly_convex_ccw(std::span<const Point>(rev))) {
      throw ContractError("quadrilateral face is not strictly convex");
    }
    const EdgeId d1 = pb.graph.add_edge(q[0], q[2]);
    const EdgeId d2 = pb.graph.add_edge(q[1], q[3]);
    expected.emplace_back(d1, d2);
  }
  StraightLineDrawing d{pb.graph, pb.coords, provenance};
  if (auto bad = validate_graph(d.graph)) throw ContractError("construction is not simple: " + bad->message);
  if (!validate_simplicity(d).ok) throw ContractError("construction drawing is not simple");
  if (compute_crossings(d) != CrossingRelation(expected)) {
    throw ContractError("construction crossings differ from the diagonal pairs");
  }
  if (!is_k_fan_free(d, 2)) throw FalsificationError("construction contains a fan crossing");
  return d;
}

}  // namespace

StraightLineDrawing gen_straight_extremal(int n) {
  if (n < 6) throw DomainError("straight-line extremal drawings are built for n >= 6");
  constexpr long long scale = 6;
  const std::array<std::pair<long long, long long>, 3> base{{{-4, -2}, {4, -2}, {0, 4}}};
  const int gadget = n % 3 == 0 ? 0 : (n % 3 == 1 ? 4 : 5);
  const int layers = (n - gadget) / 3;

  PlaneBuilder pb;
  std::vector<VertexId> g;
  if (gadget == 4) {
    for (auto [x, y] : std::array<std::pair<long long, long long>, 4>{{{-11, -5}, {-6, -8}, {5, -9}, {-9, 0}}}) {
      g.push_back(pb.add_vertex(x, y));
    }
  } else if (gadget == 5) {
    for (auto [x, y] : std::array<std::pair<long long, long long>, 5>{{{-2, -5}, {13, -4}, {-1, 9}, {-5, -2}, {-2, -3}}}) {
      g.push_back(pb.add_vertex(x, y));
    }
  }
  std::vector<std::array<VertexId, 3>> tri(static_cast<std::size_t>(layers));
  for (int j = 0; j < layers; ++j) {
    for (int i = 0; i < 3; ++i) {
      const long long f = scale * (j + 1);
      tri[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          pb.add_vertex(f * base[static_cast<std::size_t>(i)].first, f * base[static_cast<std::size_t>(i)].second);
    }
  }
  for (int j = 0; j < layers; ++j) {
    const auto& t = tri[static_cast<std::size_t>(j)];
    for (int i = 0; i < 3; ++i) pb.edge(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 3)]);
  }
  for (int j = 0; j + 1 < layers; ++j) {
    const auto& in = tri[static_cast<std::size_t>(j)];
    const auto& out = tri[static_cast<std::size_t>(j + 1)];
    for (int i = 0; i < 3; ++i) pb.edge(in[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 3; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>((i + 1) % 3);
      pb.quads.push_back({in[a], in[b], out[b], out[a]});
    }
  }
  if (gadget > 0) {
    const auto& t = tri[0];
    for (int i = 0; i < gadget; ++i) pb.edge(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>((i + 1) % gadget)]);
    if (gadget == 4) {
      pb.edge(t[0], g[0]);
      pb.edge(t[0], g[1]);
      pb.edge(t[1], g[2]);
      pb.edge(t[2], g[3]);
      pb.quads.push_back({t[0], t[1], g[2], g[1]});
      pb.quads.push_back({t[1], t[2], g[3], g[2]});
      pb.quads.push_back({t[2], t[0], g[0], g[3]});
      pb.quads.push_back({g[0], g[1], g[2], g[3]});
    } else {
      pb.edge(t[0], g[0]);
      pb.edge(t[1], g[1]);
      pb.edge(t[2], g[2]);
      pb.edge(t[0], g[3]);
      pb.edge(g[4], g[1]);
      pb.quads.push_back({t[0], t[1], g[1], g[0]});
      pb.quads.push_back({t[1], t[2], g[2], g[1]});
      pb.quads.push_back({t[2], t[0], g[3], g[2]});
      pb.quads.push_back({t[0], g[3], g[4], g[0]});
      pb.quads.push_back({g[1], g[2], g[3], g[4]});
    }
  }
  if (pb.graph.edge_count() != static_cast<std::size_t>(2 * n - 3)) {
    throw ContractError("nested-triangle skeleton has the wrong edge count");
  }
  auto d = finish_with_diagonals(pb, "straight-extremal(n=" + std::to_string(n) + ")");
  if (d.graph.edge_count() != static_cast<std::size_t>(4 * n - 9)) throw ContractError("wrong extremal edge count");
  return d;
}

StraightLineDrawing gen_k6() {
  auto d = gen_straight_extremal(6);
  d.provenance = "k6";
  return d;
}

std::vector<std::pair<int, int>> grid_stencil(int k) {
  if (k < 2) throw DomainError("k must be at least 2");
  const std::size_t want = static_cast<std::size_t>(k - 1);
  for (int r = 1;; ++r) {
    std::vector<std::pair<int, int>> vecs;
    for (int a = -r; a <= r; ++a) {
      for (int b = 0; b <= r; ++b) {
        if (b == 0 && a <= 0) continue;
        if (a * a + b * b > r * r) continue;
        if (std::gcd(std::abs(a), b) != 1) continue;
        vecs.emplace_back(a, b);
      }
    }
    if (vecs.size() < want) continue;
    std::sort(vecs.begin(), vecs.end(), [](const auto& p, const auto& q) {
      const int lp = p.first * p.first + p.second * p.second;
      const int lq = q.first * q.first + q.second * q.second;
      if (lp != lq) return lp < lq;
      return compare_direction(IntPoint{p.first, p.second}, IntPoint{q.first, q.second}) < 0;
    });
    vecs.resize(want);
    return vecs;
  }
}

StraightLineDrawing gen_grid(int s, int k) {
  if (s < 4) throw DomainError("grid side must be at least 4");
  const auto stencil = grid_stencil(k);
  StraightLineDrawing d;
  d.provenance = "grid(s=" + std::to_string(s) + ",k=" + std::to_string(k) + ")";
  d.graph = Graph(static_cast<std::size_t>(s * s));
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) d.coords.emplace_back(x, y);
  }
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      for (const auto& [a, b] : stencil) {
        const int nx = x + a;
        const int ny = y + b;
        if (nx < 0 || nx >= s || ny < 0 || ny >= s) continue;
        d.graph.add_edge(static_cast<VertexId>(y * s + x), static_cast<VertexId>(ny * s + nx));
      }
    }
  }
  if (!validate_simplicity(d).ok) throw ContractError("grid drawing is not simple");
  const auto fans = find_k_fans(d.graph, compute_crossings(d), k);
  if (!fans.empty()) {
    const auto& w = fans.front();
    throw FalsificationError("grid contains a " + std::to_string(k) + "-fan: edge " + std::to_string(w.crosser) +
                             " at vertex " + std::to_string(w.apex));
  }
  return d;
}

namespace {

// lattice points on the circle x^2 + y^2 = 1105^2, counterclockwise from the positive x-axis
std::vector<std::pair<long long, long long>> circle_points() {
  constexpr long long r = 1105;
  std::vector<std::pair<long long, long long>> pts;
  for (long long x = -r; x <= r; ++x) {
    const long long y2 = r * r - x * x;
    auto y = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(y2))));
    while (y * y > y2) --y;
    while ((y + 1) * (y + 1) <= y2) ++y;
    if (y * y != y2) continue;
    pts.emplace_back(x, y);
    if (y != 0) pts.emplace_back(x, -y);
  }
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    return compare_direction(IntPoint{p.first, p.second}, IntPoint{q.first, q.second}) < 0;
  });
  return pts;
}

}  // namespace

StraightLineDrawing gen_kq_subdivision(int q) {
  if (q < 3 || q > 12) throw DomainError("K_q subdivision is built for 3 <= q <= 12");
  const auto circle = circle_points();
  std::vector<Point> hubs;
  for (int i = 0; i < q; ++i) {
    const auto& p = circle[static_cast<std::size_t>(i) * circle.size() / static_cast<std::size_t>(q)];
    hubs.emplace_back(p.first, p.second);
  }
  Rational eps = make_rational(1, 8LL * q * q);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    StraightLineDrawing d;
    d.provenance = "kq-subdivision(q=" + std::to_string(q) + ")";
    d.coords = hubs;
    std::vector<Edge> edges;
    for (int a = 0; a < q; ++a) {
      for (int b = a + 1; b < q; ++b) {
        const auto& pa = hubs[static_cast<std::size_t>(a)];
        const auto& pb = hubs[static_cast<std::size_t>(b)];
        const Rational dx = pb.x - pa.x;
        const Rational dy = pb.y - pa.y;
        const auto x = static_cast<VertexId>(d.coords.size());
        d.coords.emplace_back(pa.x + eps * dx, pa.y + eps * dy);
        const auto y = static_cast<VertexId>(d.coords.size());
        d.coords.emplace_back(pb.x - eps * dx, pb.y - eps * dy);
        edges.push_back({static_cast<VertexId>(a), x});
        edges.push_back({x, y});
        edges.push_back({static_cast<VertexId>(b), y});
      }
    }
    d.graph = Graph(d.coords.size(), std::move(edges));
    if (!validate_simplicity(d).ok) continue;
    if (find_k_fans(d.graph, compute_crossings(d), 2).empty()) return d;
  }
  throw FalsificationError("no subdivision parameter gives a fan-crossing free K_q subdivision");
}

StraightLineDrawing gen_tri_plus_dual(int rows, int cols) {
  if (rows < 3 || cols < 3) throw DomainError("triangulation grid needs at least 3 rows and 3 columns");
  StraightLineDrawing d;
  d.provenance = "tri-plus-dual(rows=" + std::to_string(rows) + ",cols=" + std::to_string(cols) + ")";
  d.graph = Graph(static_cast<std::size_t>(rows * cols));
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) d.coords.emplace_back(x, y);
  }
  auto id = [cols](int x, int y) { return static_cast<VertexId>(y * cols + x); };
  auto inside = [&](int x, int y) { return x >= 0 && x < cols && y >= 0 && y < rows; };
  std::set<std::pair<VertexId, VertexId>> seen;
  auto add = [&](int x1, int y1, int x2, int y2) {
    if (!inside(x1, y1) || !inside(x2, y2)) return;
    VertexId a = id(x1, y1);
    VertexId b = id(x2, y2);
    if (a > b) std::swap(a, b);
    if (seen.emplace(a, b).second) d.graph.add_edge(a, b);
  };
  // triangulation: squares split by the (x,y)-(x+1,y+1) diagonal
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      add(x, y, x + 1, y);
      add(x, y, x, y + 1);
      add(x, y, x + 1, y + 1);
    }
  }
  // duals: join the apexes of the two triangles on each interior edge
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (inside(x + 1, y + 1)) add(x + 1, y, x, y + 1);
      if (inside(x + 1, y) && y >= 1 && y + 1 < rows) add(x, y - 1, x + 1, y + 1);
      if (inside(x, y + 1) && x >= 1 && x + 1 < cols) add(x - 1, y, x + 1, y + 1);
    }
  }
  if (!validate_simplicity(d).ok) throw ContractError("triangulation drawing is not simple");
  const auto fans = find_k_fans(d.graph, compute_crossings(d), 4);
  if (!fans.empty()) throw FalsificationError("triangulation plus duals contains a 4-fan");
  return d;
}

Drawing generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  if (f == "quad-extremal") return gen_quad_extremal(spec.n);
  if (f == "straight-extremal") return gen_straight_extremal(spec.n);
  if (f == "k6") return gen_k6();
  if (f == "grid") return gen_grid(spec.side, spec.k);
  if (f == "kq-subdivision") return gen_kq_subdivision(spec.q);
  if (f == "tri-plus-dual") return gen_tri_plus_dual(spec.rows, spec.cols);
  throw DomainError("unknown family '" + f + "'");
}

int family_k(const GeneratorSpec& spec) {
  if (spec.family == "grid") return spec.k;
  if (spec.family == "tri-plus-dual") return 4;
  return 2;
}

}  // namespace fanfree
