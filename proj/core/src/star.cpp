#include "fanfree/star.hpp"

#include "fanfree/error.hpp"

#include <algorithm>
#include <map>

namespace fanfree {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

StarConfig::StarConfig(int m, std::vector<Arrow> arrows) : m_(m), arrows_(std::move(arrows)) {}

StarConfig StarConfig::from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Arrow> arrows;
  arrows.reserve(pairs.size());
  for (const auto& [s, j] : pairs) arrows.push_back({s, j, 0});
  if (m >= 3) {
    std::map<int, std::vector<std::size_t>> by_exit;
    for (std::size_t i = 0; i < arrows.size(); ++i) by_exit[mod(arrows[i].exit, m)].push_back(i);
    for (auto& [j, ids] : by_exit) {
      // the start closest to v_{j+1} (going forward) gets the endpoint closest to v_{j+1}
      std::stable_sort(ids.begin(), ids.end(), [&, jj = j](std::size_t a, std::size_t b) {
        return mod(arrows[a].start - (jj + 1), m) < mod(arrows[b].start - (jj + 1), m);
      });
      const int count = static_cast<int>(ids.size());
      for (int r = 0; r < count; ++r) arrows[ids[static_cast<std::size_t>(r)]].slot = count - 1 - r;
    }
  }
  return StarConfig(m, std::move(arrows));
}

std::vector<std::pair<int, int>> StarConfig::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : arrows_) out.emplace_back(a.start, a.exit);
  std::sort(out.begin(), out.end());
  return out;
}

bool legal_arrow(int m, int start, int exit) {
  if (m < 3 || start < 0 || start >= m || exit < 0 || exit >= m) return false;
  return exit != start && exit != mod(start - 1, m);
}

std::optional<std::string> validate_star(const StarConfig& s) {
  const int m = s.m();
  if (m < 3) return "a star needs at least 3 vertices, got " + std::to_string(m);
  std::map<int, std::vector<int>> slots;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = s.arrow(i);
    if (a.start < 0 || a.start >= m) return "arrow " + std::to_string(i) + " starts outside the star";
    if (a.exit < 0 || a.exit >= m) return "arrow " + std::to_string(i) + " exits through a missing edge";
    if (!legal_arrow(m, a.start, a.exit)) {
      return "arrow " + std::to_string(i) + " exits through an edge incident to its start";
    }
    slots[a.exit].push_back(a.slot);
  }
  for (auto& [j, list] : slots) {
    std::sort(list.begin(), list.end());
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (list[r] != static_cast<int>(r)) return "slots on edge " + std::to_string(j) + " are not a permutation";
    }
  }
  return std::nullopt;
}

std::vector<CyclePoint> refined_cycle(const StarConfig& s) {
  const int m = s.m();
  std::vector<std::vector<std::pair<int, int>>> on_edge(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < s.size(); ++i) {
    on_edge[static_cast<std::size_t>(s.arrow(i).exit)].emplace_back(s.arrow(i).slot, static_cast<int>(i));
  }
  std::vector<CyclePoint> out;
  for (int v = 0; v < m; ++v) {
    out.push_back({CyclePoint::Kind::vertex, v});
    auto& list = on_edge[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end());
    for (const auto& [slot, idx] : list) out.push_back({CyclePoint::Kind::endpoint, idx});
  }
  return out;
}

namespace {

struct ChordTable {
  std::vector<int> vertex_pos;
  std::vector<int> end_pos;
};

ChordTable chord_table(const StarConfig& s) {
  ChordTable t;
  t.vertex_pos.assign(static_cast<std::size_t>(s.m()), 0);
  t.end_pos.assign(s.size(), 0);
  const auto cyc = refined_cycle(s);
  for (std::size_t p = 0; p < cyc.size(); ++p) {
    auto& slot = cyc[p].kind == CyclePoint::Kind::vertex ? t.vertex_pos : t.end_pos;
    slot[static_cast<std::size_t>(cyc[p].index)] = static_cast<int>(p);
  }
  return t;
}

bool interleave(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  const bool b1_in = a1 < b1 && b1 < a2;
  const bool b2_in = a1 < b2 && b2 < a2;
  return b1_in != b2_in;
}

bool cross_with(const StarConfig& s, const ChordTable& t, std::size_t a, std::size_t b) {
  if (a == b) return false;
  const auto& x = s.arrow(a);
  const auto& y = s.arrow(b);
  if (x.start == y.start) return false;
  return interleave(t.vertex_pos[static_cast<std::size_t>(x.start)], t.end_pos[a],
                    t.vertex_pos[static_cast<std::size_t>(y.start)], t.end_pos[b]);
}

}  // namespace

bool arrows_cross(const StarConfig& s, std::size_t a, std::size_t b) {
  if (a >= s.size() || b >= s.size()) throw DomainError("arrow index out of range");
  return cross_with(s, chord_table(s), a, b);
}

std::optional<StarFan> find_star_fan(const StarConfig& s, int k) {
  if (k < 2) throw DomainError("k must be at least 2");
  const int m = s.m();
  const auto t = chord_table(s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::vector<int> count(static_cast<std::size_t>(m), 0);
    const int j = s.arrow(a).exit;
    ++count[static_cast<std::size_t>(j)];
    ++count[static_cast<std::size_t>(mod(j + 1, m))];
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (cross_with(s, t, a, b)) ++count[static_cast<std::size_t>(s.arrow(b).start)];
    }
    for (int v = 0; v < m; ++v) {
      if (count[static_cast<std::size_t>(v)] >= k) {
        return StarFan{StarFan::Crosser::arrow, static_cast<int>(a), v, count[static_cast<std::size_t>(v)]};
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    std::vector<int> count(static_cast<std::size_t>(m), 0);
    for (const auto& a : s.arrows()) {
      if (a.exit == j) ++count[static_cast<std::size_t>(a.start)];
    }
    for (int v = 0; v < m; ++v) {
      if (count[static_cast<std::size_t>(v)] >= k) {
        return StarFan{StarFan::Crosser::boundary_edge, j, v, count[static_cast<std::size_t>(v)]};
      }
    }
  }
  return std::nullopt;
}

bool is_fan_free(const StarConfig& s, int k) { return !find_star_fan(s, k).has_value(); }

int arrow_length(const StarConfig& s, std::size_t a) {
  const auto& x = s.arrow(a);
  const int m = s.m();
  if (!legal_arrow(m, x.start, x.exit)) throw DomainError("illegal arrow");
  const int forward = mod(x.exit - x.start, m);
  return std::min(forward, m - 1 - forward);
}

int short_arrow_witness(const StarConfig& s, std::size_t a) {
  if (arrow_length(s, a) != 1) throw DomainError("arrow " + std::to_string(a) + " is long and has no witness");
  const auto& x = s.arrow(a);
  const int m = s.m();
  if (mod(x.exit - x.start, m) == 1) return mod(x.start + 1, m);
  return mod(x.start - 1, m);
}

std::string to_string(VertexTag t) {
  switch (t) {
    case VertexTag::heavy: return "heavy";
    case VertexTag::left_light: return "left-light";
    case VertexTag::right_light: return "right-light";
    case VertexTag::void_vertex: return "void";
  }
  return "unknown";
}

VertexClass classify_vertices(int m, const std::vector<int>& mult) {
  auto at = [&](int s, int j) { return mult[static_cast<std::size_t>(mod(s, m) * m + mod(j, m))]; };
  std::vector<int> degree(static_cast<std::size_t>(m), 0);
  for (int s = 0; s < m; ++s) {
    for (int j = 0; j < m; ++j) degree[static_cast<std::size_t>(s)] += at(s, j);
  }
  VertexClass out;
  out.tags.assign(static_cast<std::size_t>(m), VertexTag::heavy);
  int first_heavy = -1;
  for (int v = 0; v < m; ++v) {
    if (degree[static_cast<std::size_t>(v)] > 0) {
      first_heavy = v;
      break;
    }
  }
  if (first_heavy < 0) {
    std::fill(out.tags.begin(), out.tags.end(), VertexTag::left_light);
  } else {
    // walk once around the cycle starting after a heavy vertex so runs never wrap
    int i = 1;
    while (i <= m) {
      const int v = mod(first_heavy + i, m);
      if (degree[static_cast<std::size_t>(v)] > 0) {
        ++i;
        continue;
      }
      int len = 0;
      while (degree[static_cast<std::size_t>(mod(first_heavy + i + len, m))] == 0) ++len;
      const int f = v;
      const int l = mod(f + len - 1, m);
      const bool left_ok = at(f - 1, f) == 0;
      const bool right_ok = at(l + 1, l - 1) == 0;
      for (int r = 0; r < len; ++r) {
        const auto idx = static_cast<std::size_t>(mod(f + r, m));
        if (left_ok) {
          out.tags[idx] = VertexTag::left_light;
        } else if (right_ok) {
          out.tags[idx] = VertexTag::right_light;
        } else {
          out.tags[idx] = r + 1 < len ? VertexTag::right_light : VertexTag::void_vertex;
        }
      }
      i += len;
    }
  }
  for (auto t : out.tags) {
    if (t == VertexTag::heavy) {
      ++out.counts.heavy;
    } else if (t == VertexTag::void_vertex) {
      ++out.counts.void_count;
    } else {
      ++out.counts.light;
    }
  }
  return out;
}

VertexClass classify_vertices(const StarConfig& s) {
  const int m = s.m();
  std::vector<int> mult(static_cast<std::size_t>(m * m), 0);
  for (const auto& a : s.arrows()) ++mult[static_cast<std::size_t>(a.start * m + a.exit)];
  return classify_vertices(m, mult);
}

long long bound_B(int h, int l, int v, int k) {
  if (h < 2 || l < 0 || v < 0 || k < 3) throw DomainError("bound_B needs h >= 2, l, v >= 0 and k >= 3");
  const long long kk = k;
  return (3 * kk - 5) * h + kk * l + (2 * kk - 3) * v - (6 * kk - 9);
}

long long base_case_value(const ClassCounts& cls, int k) {
  const long long kk = k;
  const int h = cls.heavy;
  const int l = cls.light;
  const int v = cls.void_count;
  if (h == 3 && l == 0 && v == 0) return 3 * kk - 6;
  if (h == 2 && l == 0 && v == 1) return 2 * kk - 4;
  if (h == 2 && l == 1 && v == 0) return kk - 1;
  if (h == 4 && l == 0 && v == 0) return 5 * kk - 9;
  if (h == 3 && l == 0 && v == 1) return 4 * kk - 6;
  if (h == 3 && l == 1 && v == 0) return 3 * kk - 5;
  if (h == 2 && l == 0 && v == 2) return 4 * kk - 8;
  if (h == 2 && l == 1 && v == 1) return 3 * kk - 5;
  if (h == 2 && l == 2 && v == 0) return 2 * kk - 2;
  throw DomainError("no base case for this class");
}

std::vector<BaseCaseRow> verify_base_cases(int k, const SearchOptions& options) {
  if (k < 3) throw DomainError("base cases are stated for k >= 3");
  const ClassCounts rows[] = {{3, 0, 0}, {2, 0, 1}, {2, 1, 0}, {4, 0, 0}, {3, 0, 1},
                              {3, 1, 0}, {2, 0, 2}, {2, 1, 1}, {2, 2, 0}};
  std::vector<BaseCaseRow> out;
  for (const auto& cls : rows) {
    BaseCaseRow row;
    row.cls = cls;
    row.m = cls.heavy + cls.light + cls.void_count;
    row.expected = base_case_value(cls, k);
    row.bound = bound_B(cls.heavy, cls.light, cls.void_count, k);
    auto result = max_arrows(row.m, k, SearchFilter::with_class(cls.heavy, cls.light, cls.void_count), options);
    row.feasible = result.feasible;
    row.searched = result.maximum;
    row.matches = result.feasible && result.maximum == row.expected;
    row.within_bound = !result.feasible || result.maximum <= row.bound;
    if (!result.extremal.empty()) row.witness = result.extremal.front();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace fanfree
