#pragma once

#include "fanfree/drawing.hpp"

#include <cstddef>
#include <string>

namespace fanfree {

/**
 * @brief Quadrangulation with both diagonals in every face: 4n-8 edges.
 *
 * Edges [0, 2n-4) form the quadrangulation; the rest are diagonals, two per face, and each
 * diagonal pair crosses once. The result carries a rotation system.
 * @throws DomainError for n < 8 and n = 9
 */
AbstractDrawing gen_quad_extremal(int n);

/// number of leading edges of gen_quad_extremal(n) that form the quadrangulation
inline std::size_t quad_skeleton_edges(int n) { return static_cast<std::size_t>(2 * n - 4); }

/**
 * @brief Nested triangles with convex quadrilateral faces and both diagonals: 4n-9 edges.
 * @throws DomainError for n < 6
 */
StraightLineDrawing gen_straight_extremal(int n);

/// complete graph K_6 on the straight-line extremal layout
StraightLineDrawing gen_k6();

/**
 * @brief s x s integer grid, each vertex joined to its in-bounds stencil neighbours.
 * @throws FalsificationError if the output is not k-fan-crossing free
 */
StraightLineDrawing gen_grid(int s, int k);

/// the k-1 shortest primitive directions with angle in [0, pi), by (length, angle)
std::vector<std::pair<int, int>> grid_stencil(int k);

/**
 * @brief K_q with every edge subdivided twice close to its ends; n = q + q(q-1).
 * @throws DomainError outside 3 <= q <= 12
 */
StraightLineDrawing gen_kq_subdivision(int q);

/**
 * @brief Grid triangulation plus the edge joining the far corners of each adjacent triangle pair.
 * @throws FalsificationError if the output is not 4-fan-crossing free
 */
StraightLineDrawing gen_tri_plus_dual(int rows, int cols);

struct GeneratorSpec {
  std::string family;
  int n = 0;
  int k = 2;
  int q = 0;
  int side = 0;
  int rows = 0;
  int cols = 0;
};

/// dispatches on family name: quad-extremal, straight-extremal, k6, grid, kq-subdivision, tri-plus-dual
Drawing generate(const GeneratorSpec& spec);

/// fan-freeness parameter each family is verified against
int family_k(const GeneratorSpec& spec);

}  // namespace fanfree
