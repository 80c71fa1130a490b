#pragma once

#include "fanfree/drawing.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fanfree {

/// greedy over ascending edge index: keep an edge iff it crosses no kept edge
std::vector<EdgeId> maximal_plane_subgraph(const Graph& g, const CrossingRelation& c);

/**
 * @brief Drawing data the decomposition works on: combinatorics, embedding, optional coordinates.
 */
struct EmbeddedDrawing {
  Graph graph;
  CrossingRelation crossings;
  Embedding embedding;
  std::optional<std::vector<Point>> coords;
};

EmbeddedDrawing make_embedded(const StraightLineDrawing& d);
/// @throws UnsupportedError when the drawing carries no embedding
EmbeddedDrawing make_embedded(const AbstractDrawing& d);

struct HalfEdge {
  VertexId from;
  VertexId to;
  EdgeId edge;
};

/** @brief One face of the plane subgraph H. */
struct Face {
  int id = 0;
  bool bounded = true;
  std::vector<std::vector<HalfEdge>> walks;  // boundary walks, face on the left
  std::vector<VertexId> isolated;            // isolated vertices lying in the face
  int complexity() const;                    // directed boundary sides, m(f)
  int chains() const;                        // walks plus isolated vertices, p(f)
};

struct FaceStructure {
  std::vector<Face> faces;
  // face id of the half-edge u->v for edge e: index 2e if u == edge(e).u, else 2e+1
  std::vector<int> half_edge_face;
  std::vector<int> isolated_face;  // per vertex; -1 when the vertex is not isolated in H
  std::size_t components = 0;
  int face_of(const Graph& g, EdgeId e, VertexId from) const;
};

/**
 * @brief Faces of the subgraph h.
 * @throws UnsupportedError when h is disconnected and no coordinates are available
 * @throws ContractError when h contains a crossing pair
 */
FaceStructure trace_faces(const EmbeddedDrawing& d, std::span<const EdgeId> h);
FaceStructure trace_faces(const StraightLineDrawing& d, std::span<const EdgeId> h);

struct ArrowRecord {
  EdgeId edge = 0;
  VertexId start = 0;
  int face = 0;
  EdgeId exit = 0;  // first crossed edge of H
};

std::vector<ArrowRecord> arrowize(const EmbeddedDrawing& d, const FaceStructure& faces,
                                  std::span<const EdgeId> h, std::span<const EdgeId> k_set);

struct FaceAudit {
  int id = 0;
  bool bounded = true;
  int complexity = 0;
  int chains = 0;
  int arrows = 0;
  int k = 2;
  long long bound = 0;
  bool pass = true;
};

/// 3m+8p-16 for k=2, 3(k-1)(m+2p-4)-2m+3 for k>=3
long long face_bound(int complexity, int chains, int k);

struct DecompositionReport {
  int k = 2;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<EdgeId> planar;
  std::vector<EdgeId> excluded;
  std::vector<ArrowRecord> arrows;
  std::vector<FaceAudit> faces;
  std::size_t faces_total = 0;  // r
  std::size_t components = 0;   // p
  long long complexity_sum = 0;
  long long chain_excess_sum = 0;
  bool complexity_sum_ok = false;
  bool chain_sum_ok = false;
  bool euler_ok = false;
  bool arrow_total_ok = false;
  bool maximality_ok = false;
  bool faces_ok = false;
  long long global_lhs = 0;  // 2|E|
  long long global_bound = 0;
  bool global_ok = false;
  std::size_t same_face_edges = 0;  // excluded edges whose two arrows share a face
  std::vector<std::string> violations;

  bool falsified() const { return !violations.empty(); }
};

/**
 * @brief Full decomposition and bound audit.
 * @throws DomainError for n < 3 or a drawing that is not k-fan-crossing free
 */
DecompositionReport audit(const EmbeddedDrawing& d, int k);
DecompositionReport audit(const StraightLineDrawing& d, int k);
DecompositionReport audit(const AbstractDrawing& d, int k);

}  // namespace fanfree
