#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanfree {

/**
 * @brief Arrow of an m-star: starts at vertex `start`, leaves through boundary edge `exit`.
 *
 * Boundary edge j joins v_j and v_{j+1 mod m}. `slot` ranks the endpoint among all endpoints
 * on the exit edge, counted from v_j.
 */
struct Arrow {
  int start = 0;
  int exit = 0;
  int slot = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class StarConfig {
 public:
  StarConfig() = default;
  StarConfig(int m, std::vector<Arrow> arrows);

  /// arrows given as (start, exit) pairs; slots assigned so arrows on one edge are nested
  static StarConfig from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

  int m() const noexcept { return m_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t size() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  /// (start, exit) of every arrow, sorted
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const StarConfig&, const StarConfig&) = default;

 private:
  int m_ = 3;
  std::vector<Arrow> arrows_;
};

/// first violated invariant (m, legality, slot permutation), or nullopt
std::optional<std::string> validate_star(const StarConfig& s);

bool legal_arrow(int m, int start, int exit);

struct CyclePoint {
  enum class Kind { vertex, endpoint };
  Kind kind;
  int index;  // vertex index or arrow index

  friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

std::vector<CyclePoint> refined_cycle(const StarConfig& s);

bool arrows_cross(const StarConfig& s, std::size_t a, std::size_t b);

/**
 * @brief A k-fan inside a star: crosser (arrow or boundary edge) meets k objects at apex.
 */
struct StarFan {
  enum class Crosser { arrow, boundary_edge };
  Crosser crosser;
  int index;  // arrow index or boundary edge index
  int apex;
  int count;
};

std::optional<StarFan> find_star_fan(const StarConfig& s, int k);
bool is_fan_free(const StarConfig& s, int k);

int arrow_length(const StarConfig& s, std::size_t a);
inline bool is_short(const StarConfig& s, std::size_t a) { return arrow_length(s, a) == 1; }
/// @throws DomainError if the arrow is long
int short_arrow_witness(const StarConfig& s, std::size_t a);

enum class VertexTag { heavy, left_light, right_light, void_vertex };

std::string to_string(VertexTag t);

struct ClassCounts {
  int heavy = 0;
  int light = 0;
  int void_count = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct VertexClass {
  std::vector<VertexTag> tags;
  ClassCounts counts;
};

VertexClass classify_vertices(const StarConfig& s);

/// classification from a per-pair multiplicity table mult[start * m + exit]
VertexClass classify_vertices(int m, const std::vector<int>& mult);

struct SearchFilter {
  enum class Kind { all, long_only, class_constrained };
  Kind kind = Kind::all;
  ClassCounts cls;

  static SearchFilter all() { return {}; }
  static SearchFilter long_only() { return {Kind::long_only, {}}; }
  static SearchFilter with_class(int h, int l, int v) { return {Kind::class_constrained, {h, l, v}}; }
};

struct SearchOptions {
  std::uint64_t node_budget = 2'000'000'000ULL;
  std::size_t max_witnesses = 16;
};

struct SearchResult {
  bool feasible = false;  // some configuration passes the filter
  int maximum = -1;
  std::vector<StarConfig> extremal;
  std::uint64_t nodes = 0;
};

/**
 * @brief Exact maximum number of arrows in a k-fan-free m-star passing the filter.
 * @throws InconclusiveError when the node budget runs out
 */
SearchResult max_arrows(int m, int k, const SearchFilter& filter, const SearchOptions& options = {});

/// B(h, l, v) = (3k-5)h + kl + (2k-3)v - (6k-9)
long long bound_B(int h, int l, int v, int k);

struct BaseCaseRow {
  ClassCounts cls;
  int m = 0;
  bool feasible = false;
  int searched = -1;
  long long expected = 0;
  long long bound = 0;
  bool matches = false;
  bool within_bound = false;
  std::optional<StarConfig> witness;
};

/// the nine triangle and quadrilateral rows with their closed-form values
std::vector<BaseCaseRow> verify_base_cases(int k, const SearchOptions& options = {});

/// closed-form value for a base-case row, as listed for triangles and quadrilaterals
long long base_case_value(const ClassCounts& cls, int k);

}  // namespace fanfree
