#include "fanfree/bounds.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/decompose.hpp"
#include "fanfree/error.hpp"
#include "fanfree/io.hpp"
#include "fanfree/star.hpp"
#include "fanfree/svg.hpp"
#include "fanfree_tools/repro.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace fanfree;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FANFREE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("FANFREE_BUDGET is not a number: ") + env);
    }
  }
  return SearchOptions{}.node_budget;
}

/// a document with neither coordinates nor crossings describes a graph, not a drawing
bool is_bare_graph(const json& doc) { return !doc.contains("coords") && !doc.contains("crossings"); }

BoundReport compare_document(const json& doc, int k, bool straight) {
  const auto d = drawing_from_json(doc);
  if (is_bare_graph(doc)) return check_graph_against_bounds(graph_of(d), k, straight);
  return check_graph_against_bounds(d, k, straight);
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << dump(j);
  } else {
    write_json_file(path, j);
  }
}

struct GenArgs {
  GeneratorSpec spec;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto d = generate(a.spec);
  emit(to_json(d), a.out);
  if (!a.out.empty() && a.out != "-") {
    std::cerr << provenance_of(d) << ": n=" << graph_of(d).vertex_count() << " edges=" << graph_of(d).edge_count()
              << " -> " << a.out << "\n";
  }
  return exit_ok;
}

struct CheckArgs {
  std::string input;
  int k = 2;
  std::string json_out;
};

int cmd_check(const CheckArgs& a) {
  const auto d = drawing_from_json(read_json_file(a.input));
  json payload{{"schema", schema_version}, {"k", a.k}};
  if (const auto* s = std::get_if<StraightLineDrawing>(&d)) {
    const auto simple = validate_simplicity(*s);
    payload["simplicity"] = to_json(simple);
    if (!simple.ok) {
      for (const auto& v : simple.violations) {
        std::cout << "simplicity violation: " << to_string(v.kind) << " (" << v.first << ", " << v.second << ")\n";
      }
      payload["witnesses"] = json::array();
      if (!a.json_out.empty()) emit(payload, a.json_out);
      return exit_violation;
    }
  }
  const auto c = crossings_of(d);
  const auto fans = find_k_fans(graph_of(d), c, a.k);
  json list = json::array();
  for (const auto& w : fans) {
    list.push_back(to_json(w));
    std::cout << "fan: edge " << w.crosser << " crosses";
    for (auto e : w.fan) std::cout << ' ' << e;
    std::cout << " at vertex " << w.apex << "\n";
  }
  payload["crossings"] = c.size();
  payload["witnesses"] = list;
  payload["fan_free"] = fans.empty();
  std::cout << (fans.empty() ? "k-fan-crossing free" : std::to_string(fans.size()) + " witness(es)") << " (k=" << a.k
            << ", " << c.size() << " crossings)\n";
  if (!a.json_out.empty()) emit(payload, a.json_out);
  return fans.empty() ? exit_ok : exit_violation;
}

struct AuditArgs {
  std::string input;
  int k = 2;
  std::string report;
  std::string counterexample = "counterexample-audit.json";
};

int cmd_audit(const AuditArgs& a) {
  const auto doc = read_json_file(a.input);
  const auto d = drawing_from_json(doc);
  if (const auto* ad = std::get_if<AbstractDrawing>(&d); ad && !ad->embedding) {
    const auto rep = compare_document(doc, a.k, false);
    std::cout << "no embedding: faces unavailable, edge-count check only -> " << to_string(*rep.verdict) << "\n";
    emit(to_json(rep), a.report);
    return *rep.verdict == Verdict::falsification ? exit_violation : exit_ok;
  }
  const auto rep = std::visit([&](const auto& x) { return audit(x, a.k); }, d);
  emit(to_json(rep), a.report);
  std::cout << "H=" << rep.planar.size() << " K=" << rep.excluded.size() << " faces=" << rep.faces_total
            << " components=" << rep.components << " 2|E|=" << rep.global_lhs << " <= " << rep.global_bound << "\n";
  if (rep.falsified()) {
    json doc{{"schema", schema_version}, {"reason", rep.violations}, {"k", a.k}, {"drawing", to_json(d)}};
    write_json_file(a.counterexample, doc);
    std::cout << "FALSIFICATION: " << rep.violations.front() << " (counterexample saved to " << a.counterexample
              << ")\n";
    return exit_violation;
  }
  std::cout << "all face bounds and identities hold\n";
  return exit_ok;
}

struct StarArgs {
  int m = 3;
  int k = 2;
  bool long_only = false;
  std::vector<int> cls;
  std::optional<std::uint64_t> budget;
  std::size_t witnesses = 1;
  bool base_cases = false;
  std::string json_out;
};

int cmd_star(const StarArgs& a) {
  SearchOptions options;
  options.node_budget = a.budget.value_or(default_budget());
  options.max_witnesses = a.witnesses;
  if (a.base_cases) {
    const auto rows = verify_base_cases(a.k, options);
    json table = json::array();
    bool all = true;
    for (const auto& r : rows) {
      all = all && r.matches;
      std::cout << "A(" << r.cls.heavy << "," << r.cls.light << "," << r.cls.void_count << ") searched="
                << (r.feasible ? std::to_string(r.searched) : "infeasible") << " closed-form=" << r.expected
                << " B=" << r.bound << (r.matches ? " match" : " MISMATCH") << "\n";
      table.push_back({{"class", {r.cls.heavy, r.cls.light, r.cls.void_count}},
                       {"feasible", r.feasible},
                       {"searched", r.searched},
                       {"closed_form", r.expected},
                       {"bound_B", r.bound},
                       {"matches", r.matches},
                       {"within_bound", r.within_bound},
                       {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}});
    }
    if (!a.json_out.empty()) emit({{"schema", schema_version}, {"k", a.k}, {"rows", table}}, a.json_out);
    return all ? exit_ok : exit_violation;
  }
  SearchFilter filter = SearchFilter::all();
  if (a.long_only) filter = SearchFilter::long_only();
  if (!a.cls.empty()) {
    if (a.cls.size() != 3) throw DomainError("--class takes H,L,V");
    filter = SearchFilter::with_class(a.cls[0], a.cls[1], a.cls[2]);
  }
  const auto res = max_arrows(a.m, a.k, filter, options);
  if (res.feasible) {
    std::cout << res.maximum << "\n";
  } else {
    std::cout << "infeasible\n";
  }
  if (!a.json_out.empty()) emit(to_json(res), a.json_out);
  return exit_ok;
}

struct BoundsArgs {
  std::optional<long long> n;
  int k = 2;
  bool straight = false;
  std::string input;
};

int cmd_bounds(const BoundsArgs& a) {
  BoundReport rep;
  if (!a.input.empty()) {
    rep = compare_document(read_json_file(a.input), a.k, a.straight);
  } else {
    if (!a.n) throw DomainError("bounds needs --n or --input");
    rep = bound_report(*a.n, a.k, a.straight);
  }
  json j = to_json(rep);
  if (a.k == 2) j["exact_reason"] = (a.straight ? exact_extremal_k2_straight(rep.n) : exact_extremal_k2(rep.n)).reason;
  std::cout << dump(j);
  if (rep.verdict && *rep.verdict == Verdict::falsification) {
    std::cerr << "FALSIFICATION: a fan-crossing free input exceeds the proven bound\n";
    return exit_violation;
  }
  return exit_ok;
}

struct RenderArgs {
  std::string input;
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  const auto d = drawing_from_json(read_json_file(a.input));
  const auto* s = std::get_if<StraightLineDrawing>(&d);
  if (!s) throw DomainError("render needs a drawing with coordinates");
  const auto svg = render_svg(*s, compute_crossings(*s));
  if (a.out.empty() || a.out == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(a.out);
    if (!out) throw Error("cannot write " + a.out);
    out << svg;
  }
  return exit_ok;
}

struct ReproArgs {
  std::uint64_t seed = tools::ReproOptions{}.seed;
  std::optional<std::uint64_t> budget;
  std::vector<int> only;
  std::string counterexample_dir = "counterexamples";
  long long bound_offset = 0;
  std::string json_out;
};

int cmd_repro(const ReproArgs& a) {
  tools::ReproOptions o;
  o.seed = a.seed;
  o.node_budget = a.budget.value_or(default_budget());
  o.counterexample_dir = a.counterexample_dir;
  o.bound_offset = a.bound_offset;
  o.on_result = [](const tools::CriterionResult& r) { std::cout << tools::format_row(r) << std::endl; };
  const auto report = tools::run_repro(o, a.only);
  if (!a.json_out.empty()) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"id", r.id},
                      {"claim", r.claim},
                      {"status", tools::to_string(r.status)},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    }
    emit({{"schema", schema_version}, {"seed", a.seed}, {"rows", rows}, {"exit_code", report.exit_code()}},
         a.json_out);
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fanfree: k-fan-crossing free drawings, constructions, star search and bound audits"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a verified construction");
  g->add_option("--family", gen.spec.family,
                "quad-extremal | straight-extremal | k6 | grid | kq-subdivision | tri-plus-dual")
      ->required();
  g->add_option("--n", gen.spec.n, "vertex count");
  g->add_option("--k", gen.spec.k, "fan size (grid)");
  g->add_option("--q", gen.spec.q, "K_q size (kq-subdivision)");
  g->add_option("--side", gen.spec.side, "grid side");
  g->add_option("--rows", gen.spec.rows, "rows (tri-plus-dual)");
  g->add_option("--cols", gen.spec.cols, "columns (tri-plus-dual)");
  g->add_option("--out", gen.out, "output file (stdout when omitted)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "list k-fan crossings of a drawing");
  c->add_option("--input", check.input, "drawing JSON")->required();
  c->add_option("--k", check.k, "fan size")->check(CLI::Range(2, 1 << 20));
  c->add_option("--json", check.json_out, "write the witness payload here");

  AuditArgs aud;
  auto* a = app.add_subcommand("audit", "maximal plane subgraph, faces, arrows and bound audit");
  a->add_option("--input", aud.input, "drawing JSON")->required();
  a->add_option("--k", aud.k, "fan size")->check(CLI::Range(2, 1 << 20));
  a->add_option("--report", aud.report, "report file (stdout when omitted)");
  a->add_option("--counterexample", aud.counterexample, "where to save a falsifying input");

  StarArgs star;
  auto* s = app.add_subcommand("star-search", "exact maximum number of arrows in an m-star");
  s->add_option("--m", star.m, "star size")->check(CLI::Range(3, 64));
  s->add_option("--k", star.k, "fan size")->check(CLI::Range(2, 64));
  s->add_flag("--long-only", star.long_only, "only arrows of length at least 2");
  s->add_option("--class", star.cls, "heavy,light,void counts")->delimiter(',')->expected(3);
  s->add_option("--budget", star.budget, "search node budget (default: FANFREE_BUDGET or built-in)");
  s->add_option("--witnesses", star.witnesses, "number of extremal configurations to report");
  s->add_flag("--base-cases", star.base_cases, "run the nine triangle/quadrilateral rows for --k");
  s->add_option("--json", star.json_out, "write the search result here");

  BoundsArgs bnd;
  auto* b = app.add_subcommand("bounds", "closed-form bounds and comparison of an input graph");
  b->add_option("--n", bnd.n, "vertex count");
  b->add_option("--k", bnd.k, "fan size")->check(CLI::Range(2, 1 << 20));
  b->add_flag("--straight", bnd.straight, "straight-line drawings");
  b->add_option("--input", bnd.input, "drawing JSON to compare");

  RenderArgs ren;
  auto* r = app.add_subcommand("render", "SVG rendering of a drawing with coordinates");
  r->add_option("--input", ren.input, "drawing JSON")->required();
  r->add_option("--out", ren.out, "SVG file (stdout when omitted)");

  ReproArgs rep;
  auto* p = app.add_subcommand("repro", "run the acceptance battery and print one row per claim");
  p->add_option("--seed", rep.seed, "seed for random drawings");
  p->add_option("--budget", rep.budget, "search node budget");
  p->add_option("--only", rep.only, "criterion ids to run")->delimiter(',');
  p->add_option("--counterexample-dir", rep.counterexample_dir, "where falsifying inputs are archived");
  p->add_option("--inject-bound-offset", rep.bound_offset, "fault injection: add this to every upper bound");
  p->add_option("--json", rep.json_out, "write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*c) return cmd_check(check);
    if (*a) return cmd_audit(aud);
    if (*s) return cmd_star(star);
    if (*b) return cmd_bounds(bnd);
    if (*r) return cmd_render(ren);
    if (*p) return cmd_repro(rep);
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return exit_inconclusive;
  } catch (const FalsificationError& e) {
    std::cerr << "FALSIFICATION: " << e.what() << "\n";
    return exit_violation;
  } catch (const SimplicityError& e) {
    std::cerr << "simplicity violation: " << e.what() << "\n";
    return exit_violation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
