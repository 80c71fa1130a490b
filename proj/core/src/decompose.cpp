#include "fanfree/decompose.hpp"

#include "fanfree/crossings.hpp"
#include "fanfree/error.hpp"
#include "fanfree/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace fanfree {

std::vector<EdgeId> maximal_plane_subgraph(const Graph& g, const CrossingRelation& c) {
  const auto adj = c.adjacency(g.edge_count());
  std::vector<char> kept(g.edge_count(), 0);
  std::vector<EdgeId> h;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool blocked = std::any_of(adj[e].begin(), adj[e].end(), [&](EdgeId f) { return kept[f] != 0; });
    if (!blocked) {
      kept[e] = 1;
      h.push_back(e);
    }
  }
  return h;
}

EmbeddedDrawing make_embedded(const StraightLineDrawing& d) {
  EmbeddedDrawing out;
  out.graph = d.graph;
  out.crossings = compute_crossings(d);
  out.embedding = embed(d, out.crossings);
  out.coords = d.coords;
  return out;
}

namespace {

void check_embedding(const Graph& g, const CrossingRelation& c, const Embedding& emb) {
  if (emb.rotation.size() != g.vertex_count()) throw Error("rotation system has wrong vertex count");
  const auto inc = g.incidence();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto rot = emb.rotation[v];
    std::sort(rot.begin(), rot.end());
    if (rot != inc[v]) throw Error("rotation at vertex " + std::to_string(v) + " does not list its edges");
  }
  if (emb.crossing_order.size() != g.edge_count()) throw Error("crossing order has wrong edge count");
  const auto adj = c.adjacency(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto order = emb.crossing_order[e];
    std::sort(order.begin(), order.end());
    if (order != adj[e]) throw Error("crossing order of edge " + std::to_string(e) + " does not match crossings");
  }
}

std::size_t half_index(const Graph& g, EdgeId e, VertexId from) { return 2 * e + (g.edge(e).u == from ? 0 : 1); }

}  // namespace

EmbeddedDrawing make_embedded(const AbstractDrawing& d) {
  if (!d.embedding) throw UnsupportedError("abstract drawing carries no embedding; faces are undefined");
  check_embedding(d.graph, d.crossings, *d.embedding);
  return {d.graph, d.crossings, *d.embedding, std::nullopt};
}

int Face::complexity() const {
  int m = 0;
  for (const auto& w : walks) m += static_cast<int>(w.size());
  return m;
}

int Face::chains() const { return static_cast<int>(walks.size() + isolated.size()); }

int FaceStructure::face_of(const Graph& g, EdgeId e, VertexId from) const {
  return half_edge_face.at(half_index(g, e, from));
}

FaceStructure trace_faces(const EmbeddedDrawing& d, std::span<const EdgeId> h) {
  const auto& g = d.graph;
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : h) in_h.at(e) = 1;
  for (const auto& [a, b] : d.crossings.pairs()) {
    if (in_h[a] && in_h[b]) {
      throw ContractError("plane subgraph contains crossing edges " + std::to_string(a) + " and " + std::to_string(b));
    }
  }

  std::vector<std::vector<EdgeId>> rot(g.vertex_count());
  std::vector<std::size_t> pos(2 * g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : d.embedding.rotation[v]) {
      if (!in_h[e]) continue;
      pos[half_index(g, e, v)] = rot[v].size();
      rot[v].push_back(e);
    }
  }

  // trace walks; the successor of u->v is v->w with w clockwise-next after u around v
  std::vector<int> walk_of(2 * g.edge_count(), -1);
  std::vector<std::vector<HalfEdge>> walks;
  for (EdgeId e : h) {
    for (int side = 0; side < 2; ++side) {
      const VertexId from = side == 0 ? g.edge(e).u : g.edge(e).v;
      std::size_t start = half_index(g, e, from);
      if (walk_of[start] >= 0) continue;
      const int id = static_cast<int>(walks.size());
      walks.emplace_back();
      HalfEdge cur{from, g.edge(e).other(from), e};
      while (true) {
        const std::size_t idx = half_index(g, cur.edge, cur.from);
        if (walk_of[idx] >= 0) break;
        walk_of[idx] = id;
        walks.back().push_back(cur);
        const auto& r = rot[cur.to];
        const std::size_t p = pos[half_index(g, cur.edge, cur.to)];
        const EdgeId next = r[(p + r.size() - 1) % r.size()];
        cur = HalfEdge{cur.to, g.edge(next).other(cur.to), next};
      }
    }
  }

  // components of H, isolated vertices included
  std::vector<std::size_t> comp(g.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (EdgeId e : h) comp[find(g.edge(e).u)] = find(g.edge(e).v);
  FaceStructure fs;
  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (find(v) == v) ++fs.components;
    if (rot[v].empty()) isolated.push_back(v);
  }
  fs.half_edge_face.assign(2 * g.edge_count(), -1);
  fs.isolated_face.assign(g.vertex_count(), -1);

  if (!d.coords) {
    if (fs.components != 1) {
      throw UnsupportedError("plane subgraph is disconnected; locating its components needs coordinates");
    }
    // a connected embedding: each walk bounds its own face; the face left of the reverse of
    // the first plane edge is taken as the outer one
    for (std::size_t w = 0; w < walks.size(); ++w) {
      Face f;
      f.id = static_cast<int>(w);
      f.walks.push_back(walks[w]);
      fs.faces.push_back(std::move(f));
    }
    if (walks.empty()) {
      Face f;
      f.id = 0;
      f.bounded = false;
      f.isolated = isolated;
      fs.faces.push_back(std::move(f));
    } else {
      fs.faces[static_cast<std::size_t>(walk_of[2 * h.front() + 1])].bounded = false;
    }
    for (std::size_t i = 0; i < walk_of.size(); ++i) fs.half_edge_face[i] = walk_of[i];
    for (VertexId v : isolated) fs.isolated_face[v] = 0;
    return fs;
  }

  const auto pts = to_integer_points(*d.coords);
  std::vector<BigInt> area(walks.size());
  std::vector<std::vector<IntPoint>> polys(walks.size());
  for (std::size_t w = 0; w < walks.size(); ++w) {
    for (const auto& he : walks[w]) polys[w].push_back(pts[he.from]);
    area[w] = twice_signed_area(polys[w]);
  }
  std::vector<int> face_of_walk(walks.size(), -1);
  std::vector<std::size_t> positive;
  for (std::size_t w = 0; w < walks.size(); ++w) {
    if (area[w].sign() > 0) {
      face_of_walk[w] = static_cast<int>(fs.faces.size());
      positive.push_back(w);
      Face f;
      f.id = static_cast<int>(fs.faces.size());
      f.walks.push_back(walks[w]);
      fs.faces.push_back(std::move(f));
    }
  }
  const int outer = static_cast<int>(fs.faces.size());
  {
    Face f;
    f.id = outer;
    f.bounded = false;
    fs.faces.push_back(std::move(f));
  }
  auto locate = [&](VertexId v) {
    int best = outer;
    const BigInt* best_area = nullptr;
    for (std::size_t w : positive) {
      if (find(walks[w].front().from) == find(v)) continue;
      if (!inside_polygon(pts[v], polys[w])) continue;
      if (best_area == nullptr || area[w] < *best_area) {
        best = face_of_walk[w];
        best_area = &area[w];
      }
    }
    return best;
  };
  for (std::size_t w = 0; w < walks.size(); ++w) {
    if (face_of_walk[w] >= 0) continue;
    face_of_walk[w] = locate(walks[w].front().from);
    fs.faces[static_cast<std::size_t>(face_of_walk[w])].walks.push_back(walks[w]);
  }
  for (VertexId v : isolated) {
    const int f = locate(v);
    fs.isolated_face[v] = f;
    fs.faces[static_cast<std::size_t>(f)].isolated.push_back(v);
  }
  for (std::size_t i = 0; i < walk_of.size(); ++i) {
    if (walk_of[i] >= 0) fs.half_edge_face[i] = face_of_walk[static_cast<std::size_t>(walk_of[i])];
  }
  return fs;
}

FaceStructure trace_faces(const StraightLineDrawing& d, std::span<const EdgeId> h) {
  return trace_faces(make_embedded(d), h);
}

std::vector<ArrowRecord> arrowize(const EmbeddedDrawing& d, const FaceStructure& faces, std::span<const EdgeId> h,
                                  std::span<const EdgeId> k_set) {
  const auto& g = d.graph;
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : h) in_h[e] = 1;
  std::vector<ArrowRecord> out;
  for (EdgeId e : k_set) {
    const auto& order = d.embedding.crossing_order[e];
    for (int side = 0; side < 2; ++side) {
      const VertexId x = side == 0 ? g.edge(e).u : g.edge(e).v;
      ArrowRecord rec;
      rec.edge = e;
      rec.start = x;

      bool found = false;
      if (side == 0) {
        for (auto it = order.begin(); it != order.end() && !found; ++it) {
          if (in_h[*it]) rec.exit = *it, found = true;
        }
      } else {
        for (auto it = order.rbegin(); it != order.rend() && !found; ++it) {
          if (in_h[*it]) rec.exit = *it, found = true;
        }
      }
      if (!found) {
        throw ContractError("excluded edge " + std::to_string(e) + " crosses no edge of the plane subgraph");
      }

      const auto& r = d.embedding.rotation[x];
      const auto here = std::find(r.begin(), r.end(), e);
      if (here == r.end()) throw ContractError("rotation at vertex " + std::to_string(x) + " misses its edge");
      const std::size_t p = static_cast<std::size_t>(here - r.begin());
      rec.face = -1;
      for (std::size_t step = 1; step < r.size(); ++step) {
        const EdgeId f = r[(p + r.size() - step) % r.size()];
        if (in_h[f]) {
          rec.face = faces.face_of(g, f, x);
          break;
        }
      }
      if (rec.face < 0) rec.face = faces.isolated_face[x];
      out.push_back(rec);
    }
  }
  return out;
}

long long face_bound(int complexity, int chains, int k) {
  const long long m = complexity;
  const long long p = chains;
  if (k == 2) return 3 * m + 8 * p - 16;
  return 3LL * (k - 1) * (m + 2 * p - 4) - 2 * m + 3;
}

DecompositionReport audit(const EmbeddedDrawing& d, int k) {
  const auto& g = d.graph;
  if (k < 2) throw DomainError("k must be at least 2");
  if (g.vertex_count() < 3) throw DomainError("the audit needs at least 3 vertices");
  if (auto bad = validate_graph(g)) throw DomainError("invalid graph: " + bad->message);
  const auto fans = find_k_fans(g, d.crossings, k);
  if (!fans.empty()) {
    throw DomainError("drawing is not " + std::to_string(k) + "-fan-crossing free: edge " +
                      std::to_string(fans.front().crosser) + " crosses a fan at vertex " +
                      std::to_string(fans.front().apex));
  }

  DecompositionReport rep;
  rep.k = k;
  rep.n = g.vertex_count();
  rep.edges = g.edge_count();
  rep.planar = maximal_plane_subgraph(g, d.crossings);
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : rep.planar) in_h[e] = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_h[e]) rep.excluded.push_back(e);
  }
  const auto adj = d.crossings.adjacency(g.edge_count());
  rep.maximality_ok = std::all_of(rep.excluded.begin(), rep.excluded.end(), [&](EdgeId e) {
    return std::any_of(adj[e].begin(), adj[e].end(), [&](EdgeId f) { return in_h[f] != 0; });
  });
  if (!rep.maximality_ok) rep.violations.push_back("plane subgraph is not maximal");

  const auto fs = trace_faces(d, rep.planar);
  rep.arrows = arrowize(d, fs, rep.planar, rep.excluded);
  rep.components = fs.components;
  rep.faces_total = fs.faces.size();

  std::vector<int> arrows_in(fs.faces.size(), 0);
  for (const auto& a : rep.arrows) ++arrows_in.at(static_cast<std::size_t>(a.face));
  for (std::size_t i = 0; i + 1 < rep.arrows.size(); i += 2) {
    if (rep.arrows[i].face == rep.arrows[i + 1].face) ++rep.same_face_edges;
  }

  rep.faces_ok = true;
  for (const auto& f : fs.faces) {
    FaceAudit fa;
    fa.id = f.id;
    fa.bounded = f.bounded;
    fa.complexity = f.complexity();
    fa.chains = f.chains();
    fa.arrows = arrows_in[static_cast<std::size_t>(f.id)];
    fa.k = k;
    fa.bound = face_bound(fa.complexity, fa.chains, k);
    fa.pass = fa.arrows <= fa.bound;
    if (!fa.pass) {
      rep.faces_ok = false;
      rep.violations.push_back("face " + std::to_string(f.id) + " has " + std::to_string(fa.arrows) +
                               " arrows, above its bound " + std::to_string(fa.bound));
    }
    rep.complexity_sum += fa.complexity;
    rep.chain_excess_sum += fa.chains - 1;
    rep.faces.push_back(fa);
  }

  const auto n = static_cast<long long>(rep.n);
  const auto hsize = static_cast<long long>(rep.planar.size());
  const auto r = static_cast<long long>(rep.faces_total);
  const auto p = static_cast<long long>(rep.components);
  rep.complexity_sum_ok = rep.complexity_sum == 2 * hsize;
  rep.chain_sum_ok = rep.chain_excess_sum == p - 1;
  rep.euler_ok = n - hsize + r == 1 + p;
  rep.arrow_total_ok = rep.arrows.size() == 2 * rep.excluded.size();
  if (!rep.complexity_sum_ok) rep.violations.push_back("face complexities do not sum to 2|H|");
  if (!rep.chain_sum_ok) rep.violations.push_back("chain counts do not sum to p - 1");
  if (!rep.euler_ok) rep.violations.push_back("Euler identity n - |H| + r = 1 + p fails");
  if (!rep.arrow_total_ok) rep.violations.push_back("arrow count differs from 2|K|");

  rep.global_lhs = 2 * static_cast<long long>(rep.edges);
  rep.global_bound = k == 2 ? 8 * n - 16 : 6LL * (k - 1) * (n - 2);
  rep.global_ok = rep.global_lhs <= rep.global_bound;
  if (!rep.global_ok) rep.violations.push_back("2|E| exceeds the global bound");
  return rep;
}

DecompositionReport audit(const StraightLineDrawing& d, int k) { return audit(make_embedded(d), k); }

DecompositionReport audit(const AbstractDrawing& d, int k) { return audit(make_embedded(d), k); }

}  // namespace fanfree
