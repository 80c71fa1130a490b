#include "fanfree/bounds.hpp"

#include "fanfree/crossings.hpp"
#include "fanfree/error.hpp"

namespace fanfree {

long long upper_bound(long long n, int k, bool straight) {
  if (n < 3) throw DomainError("bounds are stated for n >= 3");
  if (k < 2) throw DomainError("k must be at least 2");
  if (k == 2) return straight ? 4 * n - 9 : 4 * n - 8;
  return 3LL * (k - 1) * (n - 2);
}

ExtremalValue exact_extremal_k2(long long n) {
  if (n < 3) throw DomainError("exact values are stated for n >= 3");
  if (n <= 6) return {n * (n - 1) / 2, "complete graph K_n is fan-crossing free for n <= 6"};
  if (n == 7) {
    return {4 * n - 9,
            "no 4n-8 graph: the quadrangulation would have 10 edges, average degree 20/7 < 3, "
            "forcing a degree-2 vertex"};
  }
  if (n == 9) {
    return {4 * n - 9,
            "no 4n-8 graph: total degree 28 forces degrees (4,3,...,3); the bipartition gives "
            "4+3k = 3(8-k), i.e. 6k = 20, which has no integer solution"};
  }
  return {4 * n - 8, "quadrangulation with both diagonals in every face attains 4n-8"};
}

ExtremalValue exact_extremal_k2_straight(long long n) {
  if (n < 3) throw DomainError("exact values are stated for n >= 3");
  if (n <= 6) return {n * (n - 1) / 2, "complete graph K_n has a fan-crossing free straight-line drawing for n <= 6"};
  return {4 * n - 9, "nested triangles with both diagonals in every quadrilateral attain 4n-9"};
}

bool NonexistenceArgument::valid() const {
  for (const auto& f : facts) {
    if (!f.holds) return false;
  }
  return !facts.empty();
}

NonexistenceArgument nonexistence_argument(int n) {
  if (n != 7 && n != 9) throw DomainError("the nonexistence argument covers n = 7 and n = 9 only");
  NonexistenceArgument arg;
  arg.n = n;
  arg.quadrangulation_edges = 2LL * n - 4;
  const long long degree_sum = 2 * arg.quadrangulation_edges;
  arg.facts.push_back({"quadrangulation_edges", std::to_string(arg.quadrangulation_edges),
                       arg.quadrangulation_edges == 2LL * n - 4});
  if (n == 7) {
    // average degree 20/7 < 3, so some vertex has degree at most 2
    const bool below_three = degree_sum < 3LL * n;
    arg.facts.push_back({"total_degree", std::to_string(degree_sum), degree_sum == 20});
    arg.facts.push_back({"avg_degree", std::to_string(degree_sum) + "/" + std::to_string(n), below_three});
    arg.facts.push_back({"degree2_forced", below_three ? "true" : "false", below_three});
  } else {
    arg.facts.push_back({"total_degree", std::to_string(degree_sum), degree_sum == 28});
    // minimum degree 3 on 9 vertices leaves an excess of 1 over 27: one vertex of degree 4
    const long long excess = degree_sum - 3LL * n;
    arg.facts.push_back({"degree_sequence", "(4,3x8)", excess == 1});
    bool any_solution = false;
    for (long long k = 0; k <= 8; ++k) {
      if (4 + 3 * k == 3 * (8 - k)) any_solution = true;
    }
    // 4 + 3k = 24 - 3k  <=>  6k = 20
    const bool divisible = 20 % 6 == 0;
    arg.facts.push_back({"equation", "4+3k = 24-3k", true});
    arg.facts.push_back({"equation_reduced", "6k = 20", !divisible});
    arg.facts.push_back({"integer_solution", any_solution ? "exists" : "none", !any_solution && !divisible});
  }
  return arg;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::below_bound: return "below bound";
    case Verdict::extremal: return "extremal";
    case Verdict::cannot_be_fan_free: return "cannot be fan-crossing free";
    case Verdict::falsification: return "falsification";
  }
  return "unknown";
}

BoundReport bound_report(long long n, int k, bool straight) {
  BoundReport r;
  r.n = n;
  r.k = k;
  r.straight = straight;
  r.upper = upper_bound(n, k, straight);
  if (k == 2) {
    r.exact = straight ? exact_extremal_k2_straight(n).value : exact_extremal_k2(n).value;
    r.citation = straight ? "straight-line fan-crossing free graphs have at most 4n-9 edges (tight for n >= 6)"
                          : "fan-crossing free graphs have at most 4n-8 edges (tight for n = 8 and n >= 10)";
  } else {
    r.citation = "k-fan-crossing free graphs have at most 3(k-1)(n-2) edges for k >= 3 (not known to be tight)";
  }
  r.citation += "; asymptotic separator-based bounds are cited only and not evaluated";
  return r;
}

namespace {

Verdict verdict_for(const BoundReport& r, long long edges) {
  const long long limit = r.exact.value_or(r.upper);
  if (edges > limit) return Verdict::cannot_be_fan_free;
  if (edges == limit) return Verdict::extremal;
  return Verdict::below_bound;
}

}  // namespace

BoundReport check_graph_against_bounds(const Graph& g, int k, bool straight) {
  auto r = bound_report(static_cast<long long>(g.vertex_count()), k, straight);
  r.edges = static_cast<long long>(g.edge_count());
  r.verdict = verdict_for(r, *r.edges);
  return r;
}

BoundReport check_graph_against_bounds(const Drawing& d, int k, bool straight) {
  auto r = check_graph_against_bounds(graph_of(d), k, straight);
  r.fan_free = is_k_fan_free(d, k);
  if (*r.fan_free && *r.verdict == Verdict::cannot_be_fan_free) r.verdict = Verdict::falsification;
  return r;
}

}  // namespace fanfree
