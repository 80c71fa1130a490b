#pragma once

#include "fanfree/drawing.hpp"
#include "fanfree/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanfree {

/// 4n-8 (4n-9 straight-line) for k = 2, 3(k-1)(n-2) for k >= 3
long long upper_bound(long long n, int k, bool straight);

struct ExtremalValue {
  long long value = 0;
  std::string reason;
};

/// exact maximum edge count of a fan-crossing free graph on n vertices
ExtremalValue exact_extremal_k2(long long n);

/// exact maximum for straight-line fan-crossing free drawings
ExtremalValue exact_extremal_k2_straight(long long n);

struct ProofFact {
  std::string name;
  std::string value;
  bool holds = false;
};

struct NonexistenceArgument {
  int n = 0;
  long long quadrangulation_edges = 0;
  std::vector<ProofFact> facts;
  bool valid() const;
};

/// @throws DomainError unless n is 7 or 9
NonexistenceArgument nonexistence_argument(int n);

enum class Verdict { below_bound, extremal, cannot_be_fan_free, falsification };

std::string to_string(Verdict v);

struct BoundReport {
  long long n = 0;
  int k = 2;
  bool straight = false;
  long long upper = 0;
  std::optional<long long> exact;
  std::string citation;
  std::optional<long long> edges;
  std::optional<bool> fan_free;
  std::optional<Verdict> verdict;
};

/// closed-form values only
BoundReport bound_report(long long n, int k, bool straight);

BoundReport check_graph_against_bounds(const Graph& g, int k, bool straight);
/// also runs the fan checker; fan-free input above the bound is a falsification verdict
BoundReport check_graph_against_bounds(const Drawing& d, int k, bool straight);

}  // namespace fanfree
