#pragma once

#include "fanfree/drawing.hpp"

#include <string>
#include <vector>

namespace fanfree {

enum class SimplicityViolationKind { vertex_on_edge, adjacent_overlap, coincident_vertices };

std::string to_string(SimplicityViolationKind kind);

/**
 * @brief One simplicity violation.
 *
 * vertex_on_edge: (vertex, edge); adjacent_overlap: (edge, edge);
 * coincident_vertices: (vertex, vertex).
 */
struct SimplicityViolation {
  SimplicityViolationKind kind;
  std::uint32_t first;
  std::uint32_t second;

  friend bool operator==(const SimplicityViolation&, const SimplicityViolation&) = default;
};

struct SimplicityReport {
  bool ok = true;
  std::vector<SimplicityViolation> violations;
};

SimplicityReport validate_simplicity(const StraightLineDrawing& d);

/**
 * @brief Exact crossing relation of a straight-line drawing.
 * @throws SimplicityError on touching or overlapping edge pairs
 */
CrossingRelation compute_crossings(const StraightLineDrawing& d);

/**
 * @brief All k-fan crossings, one witness per (crosser, apex), ordered by crosser then apex.
 * @throws DomainError when k < 2 or c is invalid for g
 */
std::vector<FanWitness> find_k_fans(const Graph& g, const CrossingRelation& c, int k);

bool is_k_fan_free(const Graph& g, const CrossingRelation& c, int k);
bool is_k_fan_free(const StraightLineDrawing& d, int k);
bool is_k_fan_free(const AbstractDrawing& d, int k);
bool is_k_fan_free(const Drawing& d, int k);

/// crossing relation of any drawing (computed exactly for coordinates)
CrossingRelation crossings_of(const Drawing& d);

/**
 * @brief Rotation system and crossing orders of a straight-line drawing.
 * @throws SimplicityError when the drawing is not simple
 */
Embedding embed(const StraightLineDrawing& d, const CrossingRelation& c);

/// abstract drawing with computed crossings and embedding
AbstractDrawing to_abstract(const StraightLineDrawing& d);

}  // namespace fanfree
