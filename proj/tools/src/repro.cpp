#include "fanfree_tools/repro.hpp"

#include "fanfree/bounds.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/decompose.hpp"
#include "fanfree/error.hpp"
#include "fanfree/io.hpp"
#include "fanfree/star.hpp"
#include "fanfree_tools/oracles.hpp"
#include "fanfree_tools/random_drawings.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace fanfree::tools {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::vector<int> quad_sizes() {
  std::vector<int> ns{8};
  for (int n = 10; n <= 60; ++n) ns.push_back(n);
  return ns;
}

SearchOptions search_options(const ReproOptions& o) {
  SearchOptions s;
  s.node_budget = o.node_budget;
  s.max_witnesses = 1;
  return s;
}

/// Records every verified fan-free input that exceeds a proven bound and archives it.
class Guard {
 public:
  explicit Guard(const ReproOptions& o) : options_(o) {}

  void check(const Drawing& d, int k, bool straight, const std::string& label) {
    ++checked_;
    const auto& g = graph_of(d);
    const auto n = static_cast<long long>(g.vertex_count());
    if (n < 3) return;
    if (!is_k_fan_free(d, k)) return;
    long long limit = upper_bound(n, k, straight) + options_.bound_offset;
    if (k == 2) {
      const auto exact = straight ? exact_extremal_k2_straight(n) : exact_extremal_k2(n);
      limit = std::min(limit, exact.value + options_.bound_offset);
    }
    const auto edges = static_cast<long long>(g.edge_count());
    if (edges > limit) {
      archive(d, k, label, std::to_string(edges) + " edges exceed the proven bound " + std::to_string(limit));
      return;
    }
    const bool has_faces = std::holds_alternative<StraightLineDrawing>(d) ||
                           std::get<AbstractDrawing>(d).embedding.has_value();
    if (!has_faces) return;
    const auto rep = std::visit([k](const auto& x) { return audit(x, k); }, d);
    if (rep.falsified()) archive(d, k, label, rep.violations.front());
  }

  int events() const { return static_cast<int>(events_.size()); }
  int checked() const { return checked_; }
  const std::vector<std::string>& messages() const { return events_; }

 private:
  void archive(const Drawing& d, int k, const std::string& label, const std::string& reason) {
    std::string file = "counterexample-" + label + ".json";
    for (auto& c : file) {
      if (c == '(' || c == ')' || c == '=' || c == ',' || c == ' ') c = '_';
    }
    const auto path = options_.counterexample_dir / file;
    json doc{{"schema", schema_version}, {"reason", reason}, {"k", k}, {"drawing", to_json(d)}};
    try {
      write_json_file(path, doc);
    } catch (const std::exception&) {
      // the event is still reported even if the archive cannot be written
    }
    events_.push_back("FALSIFICATION " + label + ": " + reason + " (archived " + path.string() + ")");
  }

  const ReproOptions& options_;
  std::vector<std::string> events_;
  int checked_ = 0;
};

CriterionResult star_exact(const ReproOptions& o) {
  CriterionResult r{1, "star puzzle: max_arrows(3,2)=1 and max_arrows(4,2)=2, each < 1 s", Status::pass, {}, 0.0};
  std::ostringstream detail;
  bool ok = true;
  for (auto [m, expected] : {std::pair{3, 1}, std::pair{4, 2}}) {
    const auto t0 = Clock::now();
    const auto res = max_arrows(m, 2, SearchFilter::all(), search_options(o));
    const double s = seconds_since(t0);
    const bool row = res.maximum == expected && s < 1.0;
    ok = ok && row;
    detail << "m=" << m << ": " << res.maximum << " (expected " << expected << ", " << fmt_seconds(s) << ") ";
  }
  r.status = ok ? Status::pass : Status::fail;
  r.detail = detail.str();
  return r;
}

CriterionResult star_probe(const ReproOptions& o) {
  CriterionResult r{2, "star probe m=5..8, k=2: maximum in [2m-6, 3m-9], long arrows <= 2m-8", Status::pass, {}, 0.0};
  std::ostringstream detail;
  bool ok = true;
  bool late = false;
  for (int m = 5; m <= 8; ++m) {
    const double limit = m <= 7 ? 120.0 : 900.0;
    const auto t0 = Clock::now();
    const auto all = max_arrows(m, 2, SearchFilter::all(), search_options(o));
    const auto lng = max_arrows(m, 2, SearchFilter::long_only(), search_options(o));
    const double s = seconds_since(t0);
    const bool in_range = all.maximum >= 2 * m - 6 && all.maximum <= 3 * m - 9;
    const bool long_ok = lng.maximum <= 2 * m - 8;
    ok = ok && in_range && long_ok;
    late = late || s > limit;
    detail << "m=" << m << ": max " << all.maximum << (all.maximum == 2 * m - 6 ? " (=2m-6)" : " (!=2m-6)")
           << ", long " << lng.maximum << "<=" << 2 * m - 8 << ", " << fmt_seconds(s) << "; ";
  }
  r.status = !ok ? Status::fail : (late ? Status::inconclusive : Status::pass);
  r.detail = detail.str();
  return r;
}

CriterionResult base_cases(const ReproOptions& o) {
  CriterionResult r{3, "base cases: verify_base_cases(3) matches all nine closed forms, < 5 min", Status::pass, {}, 0.0};
  const auto t0 = Clock::now();
  const auto rows = verify_base_cases(3, search_options(o));
  const double s = seconds_since(t0);
  std::ostringstream detail;
  int matches = 0;
  for (const auto& row : rows) {
    if (row.matches) ++matches;
    detail << "A(" << row.cls.heavy << "," << row.cls.light << "," << row.cls.void_count << ")="
           << (row.feasible ? std::to_string(row.searched) : std::string("infeasible")) << " vs " << row.expected
           << (row.matches ? "" : " MISMATCH") << (row.within_bound ? "" : " ABOVE-B") << "; ";
  }
  detail << matches << "/9 match, " << fmt_seconds(s);
  r.status = matches == 9 && s < 300.0 ? Status::pass : Status::fail;
  r.detail = detail.str();
  return r;
}

CriterionResult quad_generators(const ReproOptions&) {
  CriterionResult r{4, "quad-extremal n in {8} u [10,60]: 4n-8 edges, simple, fan-free, bipartite skeleton", Status::pass, {}, 0.0};
  int bad = 0;
  std::string first;
  for (int n : quad_sizes()) {
    const auto d = gen_quad_extremal(n);
    std::vector<EdgeId> skel(quad_skeleton_edges(n));
    std::iota(skel.begin(), skel.end(), 0);
    const bool ok = d.graph.edge_count() == static_cast<std::size_t>(4 * n - 8) && !validate_graph(d.graph) &&
                    !validate_crossings(d.graph, d.crossings) && d.crossings.size() == static_cast<std::size_t>(n - 2) &&
                    find_k_fans(d.graph, d.crossings, 2).empty() && two_coloring(d.graph, skel).has_value();
    if (!ok) {
      ++bad;
      if (first.empty()) first = "n=" + std::to_string(n);
    }
  }
  r.status = bad == 0 ? Status::pass : Status::fail;
  r.detail = std::to_string(quad_sizes().size() - static_cast<std::size_t>(bad)) + "/" +
             std::to_string(quad_sizes().size()) + " sizes verified" + (first.empty() ? "" : ", first failure " + first);
  return r;
}

CriterionResult straight_generators(const ReproOptions&) {
  CriterionResult r{5, "straight-line extremal n in [6,60]: 4n-9 edges, exact simplicity and fan-freeness, n=6 is K6", Status::pass, {}, 0.0};
  int bad = 0;
  std::string first;
  for (int n = 6; n <= 60; ++n) {
    const auto d = gen_straight_extremal(n);
    bool ok = d.graph.edge_count() == static_cast<std::size_t>(4 * n - 9) && validate_simplicity(d).ok &&
              find_k_fans(d.graph, compute_crossings(d), 2).empty();
    if (n == 6) ok = ok && d.graph.edge_count() == 15;
    if (!ok) {
      ++bad;
      if (first.empty()) first = "n=" + std::to_string(n);
    }
  }
  r.status = bad == 0 ? Status::pass : Status::fail;
  r.detail = std::to_string(55 - bad) + "/55 sizes verified" + (first.empty() ? "" : ", first failure " + first);
  return r;
}

bool identities_hold(const DecompositionReport& rep) {
  return rep.faces_ok && rep.complexity_sum_ok && rep.chain_sum_ok && rep.euler_ok && rep.arrow_total_ok &&
         rep.global_ok && !rep.falsified();
}

CriterionResult decomposition(const ReproOptions& o) {
  CriterionResult r{6, "decomposition audit: face bounds, sums, Euler on extremal and 200 random fan-free drawings", Status::pass, {}, 0.0};
  int audited = 0;
  int bad = 0;
  int quad_arrow_bad = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& label) {
    ++audited;
    if (!ok) {
      ++bad;
      if (first.empty()) first = label;
    }
  };
  for (int n : quad_sizes()) {
    const auto rep = audit(gen_quad_extremal(n), 2);
    note(identities_hold(rep), "quad n=" + std::to_string(n));
    for (const auto& f : rep.faces) {
      if (!(f.complexity == 3 && f.chains == 1 && f.arrows == 1)) ++quad_arrow_bad;
    }
  }
  for (int n = 6; n <= 60; ++n) {
    note(identities_hold(audit(gen_straight_extremal(n), 2)), "straight n=" + std::to_string(n));
  }
  Rng rng(o.seed);
  for (int i = 0; i < o.random_audit_drawings; ++i) {
    const int n = static_cast<int>(uniform(rng, 3, 12));
    const auto d = random_fan_free_drawing(rng, n, 2, 60);
    note(identities_hold(audit(d, 2)), "random #" + std::to_string(i));
  }
  r.status = bad == 0 && quad_arrow_bad == 0 ? Status::pass : Status::fail;
  r.detail = std::to_string(audited - bad) + "/" + std::to_string(audited) + " audits pass; quad faces off one-arrow: " +
             std::to_string(quad_arrow_bad) + (first.empty() ? "" : "; first failure " + first);
  return r;
}

// (k-1)(n - 8 sqrt(nk)) <= e, evaluated in integers
bool grid_lower_bound_holds(long long e, long long n, long long k) {
  const long long deficit = (k - 1) * n - e;
  if (deficit <= 0) return true;
  return deficit * deficit <= 64 * (k - 1) * (k - 1) * n * k;
}

CriterionResult k_constructions(const ReproOptions& o) {
  CriterionResult r{7, "k >= 3: grid(s=10, k=3,4,5) and K_q subdivisions q=4..8 verified with exact edge counts", Status::pass, {}, 0.0};
  std::ostringstream detail;
  bool ok = true;
  for (int k = 3; k <= 5; ++k) {
    const auto d = gen_grid(10, k);
    const auto n = static_cast<long long>(d.graph.vertex_count());
    const auto e = static_cast<long long>(d.graph.edge_count());
    const bool fan_free = find_k_fans(d.graph, compute_crossings(d), k).empty();
    const bool row = fan_free && grid_lower_bound_holds(e, n, k) && e <= upper_bound(n, k, true) + o.bound_offset;
    ok = ok && row;
    detail << "grid k=" << k << ": " << e << " edges" << (row ? "" : " FAILED") << "; ";
  }
  for (int q = 4; q <= 8; ++q) {
    const auto d = gen_kq_subdivision(q);
    const bool row = find_k_fans(d.graph, compute_crossings(d), 2).empty() &&
                     d.graph.edge_count() == static_cast<std::size_t>(3 * q * (q - 1) / 2) &&
                     d.graph.vertex_count() == static_cast<std::size_t>(q + q * (q - 1));
    ok = ok && row;
    detail << "K_" << q << ": n=" << d.graph.vertex_count() << " e=" << d.graph.edge_count()
           << (row ? "" : " FAILED") << "; ";
  }
  r.status = ok ? Status::pass : Status::fail;
  r.detail = detail.str();
  return r;
}

CriterionResult bounds_table(const ReproOptions& o) {
  CriterionResult r{8, "bounds: upper_bound and exact_extremal_k2 for 3 <= n <= 100; n=7,9 arithmetic", Status::pass, {}, 0.0};
  int bad = 0;
  for (long long n = 3; n <= 100; ++n) {
    if (upper_bound(n, 2, false) + o.bound_offset != 4 * n - 8) ++bad;
    if (upper_bound(n, 2, true) + o.bound_offset != 4 * n - 9) ++bad;
    for (int k = 3; k <= 6; ++k) {
      if (upper_bound(n, k, false) + o.bound_offset != 3LL * (k - 1) * (n - 2)) ++bad;
    }
    long long expected = 4 * n - 8;
    if (n <= 6) expected = n * (n - 1) / 2;
    if (n == 7 || n == 9) expected = 4 * n - 9;
    if (exact_extremal_k2(n).value != expected) ++bad;
  }
  const bool values = exact_extremal_k2(7).value == 19 && exact_extremal_k2(9).value == 27;
  const auto a7 = nonexistence_argument(7);
  const auto a9 = nonexistence_argument(9);
  const bool args = a7.valid() && a9.valid() && 20 < 3 * 7;
  r.status = bad == 0 && values && args ? Status::pass : Status::fail;
  r.detail = std::to_string(bad) + " table mismatches; n=7 -> " + std::to_string(exact_extremal_k2(7).value) +
             ", n=9 -> " + std::to_string(exact_extremal_k2(9).value) + "; arguments " +
             (args ? "machine-checked" : "INVALID");
  return r;
}

CriterionResult oracle_equivalence(const ReproOptions& o) {
  CriterionResult r{9, "oracle equivalence: find_k_fans equals naive enumeration on 500 random drawings", Status::pass, {}, 0.0};
  Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  int mismatches = 0;
  int witnesses = 0;
  for (int i = 0; i < o.oracle_drawings; ++i) {
    const int k = 2 + i % 3;
    const int n = static_cast<int>(uniform(rng, 3, 12));
    const auto d = random_simple_drawing(rng, n, 20);
    const auto fast_c = compute_crossings(d);
    const auto slow_c = naive_crossings(d);
    const auto fast = find_k_fans(d.graph, fast_c, k);
    const auto slow = naive_k_fans(d.graph, slow_c, k);
    witnesses += static_cast<int>(fast.size());
    if (fast_c != slow_c || fast != slow) ++mismatches;
  }
  r.status = mismatches == 0 ? Status::pass : Status::fail;
  r.detail = std::to_string(mismatches) + " mismatches over " + std::to_string(o.oracle_drawings) + " drawings (" +
             std::to_string(witnesses) + " witnesses compared)";
  return r;
}

CriterionResult falsification_guard(const ReproOptions& o) {
  CriterionResult r{10, "falsification guard: no verified fan-free input exceeds a proven bound", Status::pass, {}, 0.0};
  Guard guard(o);
  for (int n : quad_sizes()) guard.check(gen_quad_extremal(n), 2, false, "quad-extremal(n=" + std::to_string(n) + ")");
  for (int n = 6; n <= 60; ++n) {
    guard.check(gen_straight_extremal(n), 2, true, "straight-extremal(n=" + std::to_string(n) + ")");
  }
  for (int k = 3; k <= 5; ++k) guard.check(gen_grid(10, k), k, true, "grid(s=10,k=" + std::to_string(k) + ")");
  for (int q = 4; q <= 8; ++q) guard.check(gen_kq_subdivision(q), 2, true, "kq(q=" + std::to_string(q) + ")");
  guard.check(gen_tri_plus_dual(6, 6), 4, true, "tri-plus-dual(6x6)");
  Rng rng(o.seed + 1);
  for (int i = 0; i < o.random_audit_drawings; ++i) {
    const int k = 2 + i % 3;
    const int n = static_cast<int>(uniform(rng, 3, 12));
    guard.check(random_fan_free_drawing(rng, n, k, 60), k, true, "random(k=" + std::to_string(k) + ",#" + std::to_string(i) + ")");
  }
  r.status = guard.events() == 0 ? Status::pass : Status::fail;
  r.detail = std::to_string(guard.checked()) + " inputs checked, " + std::to_string(guard.events()) + " falsification events";
  if (guard.events() > 0) r.detail += "; " + guard.messages().front();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const ReproOptions& options) {
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = star_exact(options); break;
      case 2: r = star_probe(options); break;
      case 3: r = base_cases(options); break;
      case 4: r = quad_generators(options); break;
      case 5: r = straight_generators(options); break;
      case 6: r = decomposition(options); break;
      case 7: r = k_constructions(options); break;
      case 8: r = bounds_table(options); break;
      case 9: r = oracle_equivalence(options); break;
      case 10: r = falsification_guard(options); break;
      default: throw DomainError("no criterion " + std::to_string(id));
    }
  } catch (const InconclusiveError& e) {
    r = {id, "criterion " + std::to_string(id), Status::inconclusive, e.what()};
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), Status::fail, std::string("error: ") + e.what()};
  }
  r.seconds = seconds_since(t0);
  return r;
}

int ReproReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& row : rows) {
    if (row.status == Status::fail) return 1;
    if (row.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

ReproReport run_repro(const ReproOptions& options, const std::vector<int>& only) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
  }
  ReproReport report;
  for (int id : ids) {
    report.rows.push_back(run_criterion(id, options));
    if (options.on_result) options.on_result(report.rows.back());
  }
  return report;
}

std::string format_row(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%-12s] %2d ", to_string(r.status).c_str(), r.id);
  return std::string(head) + r.claim + " | " + r.detail + " | " + fmt_seconds(r.seconds);
}

}  // namespace fanfree::tools
