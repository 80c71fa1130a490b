#include "fanfree/io.hpp"

#include "fanfree/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace fanfree {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(v.convert_to<std::int64_t>());
  }
  return json(v.str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("expected an integer or a decimal string");
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

namespace {

json pairs_json(const CrossingRelation& c) {
  json out = json::array();
  for (const auto& [a, b] : c.pairs()) out.push_back({a, b});
  return out;
}

json base_document(const Graph& g, const std::string& provenance) {
  json j;
  j["schema"] = schema_version;
  j["provenance"] = provenance;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j;
}

}  // namespace

json to_json(const StraightLineDrawing& d) {
  json j = base_document(d.graph, d.provenance);
  json coords = json::array();
  for (const auto& p : d.coords) {
    coords.push_back({big_to_json(numerator(p.x)), big_to_json(denominator(p.x)), big_to_json(numerator(p.y)),
                      big_to_json(denominator(p.y))});
  }
  j["coords"] = coords;
  return j;
}

json to_json(const AbstractDrawing& d) {
  json j = base_document(d.graph, d.provenance);
  j["crossings"] = pairs_json(d.crossings);
  if (d.embedding) {
    j["rotation"] = d.embedding->rotation;
    j["crossing_order"] = d.embedding->crossing_order;
  }
  return j;
}

json to_json(const Drawing& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

namespace {

void check_schema(const json& j) {
  if (!j.is_object()) throw Error("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != schema_version) {
    throw Error("unsupported schema version " + j.at("schema").dump());
  }
}

}  // namespace

Drawing drawing_from_json(const json& j) {
  check_schema(j);
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw Error("n must be at least 1");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edges must be [u, v] pairs");
      const auto a = e[0].get<std::int64_t>();
      const auto b = e[1].get<std::int64_t>();
      if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge endpoint out of range");
      edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
    Graph g(static_cast<std::size_t>(n), std::move(edges));
    if (auto bad = validate_graph(g)) throw Error("invalid graph: " + bad->message);
    const std::string provenance = j.value("provenance", std::string("external"));

    std::optional<CrossingRelation> crossings;
    if (j.contains("crossings")) {
      std::vector<EdgePair> pairs;
      for (const auto& p : j.at("crossings")) {
        if (!p.is_array() || p.size() != 2) throw Error("crossings must be [i, j] pairs");
        pairs.emplace_back(p[0].get<EdgeId>(), p[1].get<EdgeId>());
      }
      crossings = CrossingRelation(std::move(pairs));
      if (auto bad = validate_crossings(g, *crossings)) throw Error("invalid crossings: " + *bad);
    }

    if (j.contains("coords")) {
      StraightLineDrawing d;
      d.graph = std::move(g);
      d.provenance = provenance;
      for (const auto& c : j.at("coords")) {
        if (!c.is_array() || c.size() != 4) throw Error("coordinates must be [num, den, num, den]");
        const BigInt dx = big_from_json(c[1]);
        const BigInt dy = big_from_json(c[3]);
        if (dx == 0 || dy == 0) throw Error("zero denominator in coordinates");
        d.coords.emplace_back(Rational(big_from_json(c[0]), dx), Rational(big_from_json(c[2]), dy));
      }
      if (d.coords.size() != d.graph.vertex_count()) throw Error("coordinate count differs from n");
      if (crossings && *crossings != compute_crossings(d)) {
        throw Error("stored crossings disagree with the coordinates");
      }
      return d;
    }

    AbstractDrawing d;
    d.graph = std::move(g);
    d.provenance = provenance;
    if (crossings) d.crossings = *crossings;
    if (j.contains("rotation") || j.contains("crossing_order")) {
      Embedding emb;
      emb.rotation = j.at("rotation").get<std::vector<std::vector<EdgeId>>>();
      emb.crossing_order = j.at("crossing_order").get<std::vector<std::vector<EdgeId>>>();
      d.embedding = std::move(emb);
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed drawing document: ") + e.what());
  }
}

json to_json(const StarConfig& s) {
  json arrows = json::array();
  for (const auto& a : s.arrows()) arrows.push_back({a.start, a.exit, a.slot});
  return {{"schema", schema_version}, {"m", s.m()}, {"arrows", arrows}};
}

StarConfig star_from_json(const json& j) {
  check_schema(j);
  try {
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3) throw Error("arrows must be [start, exit, slot] triples");
      arrows.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
    }
    StarConfig s(j.at("m").get<int>(), std::move(arrows));
    if (auto bad = validate_star(s)) throw Error("invalid star: " + *bad);
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed star document: ") + e.what());
  }
}

json to_json(const FanWitness& w) { return {{"crosser", w.crosser}, {"apex", w.apex}, {"fan", w.fan}}; }

json to_json(const SimplicityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", to_string(x.kind)}, {"indices", {x.first, x.second}}});
  return {{"ok", r.ok}, {"violations", v}};
}

json to_json(const DecompositionReport& r) {
  json arrows = json::array();
  for (const auto& a : r.arrows) {
    arrows.push_back({{"edge", a.edge}, {"start", a.start}, {"face", a.face}, {"exit", a.exit}});
  }
  json faces = json::array();
  for (const auto& f : r.faces) {
    faces.push_back({{"id", f.id},
                     {"bounded", f.bounded},
                     {"complexity", f.complexity},
                     {"chains", f.chains},
                     {"arrows", f.arrows},
                     {"k", f.k},
                     {"bound", f.bound},
                     {"pass", f.pass}});
  }
  return {{"schema", schema_version},
          {"k", r.k},
          {"planar", r.planar},
          {"excluded", r.excluded},
          {"arrows", arrows},
          {"faces", faces},
          {"global",
           {{"n", r.n},
            {"edges", r.edges},
            {"m", r.planar.size()},
            {"r", r.faces_total},
            {"p", r.components},
            {"complexity_sum", r.complexity_sum},
            {"chain_excess_sum", r.chain_excess_sum},
            {"complexity_sum_ok", r.complexity_sum_ok},
            {"chain_sum_ok", r.chain_sum_ok},
            {"euler_ok", r.euler_ok},
            {"arrow_total_ok", r.arrow_total_ok},
            {"maximality_ok", r.maximality_ok},
            {"faces_ok", r.faces_ok},
            {"twice_edges", r.global_lhs},
            {"global_bound", r.global_bound},
            {"global_ok", r.global_ok}}},
          {"same_face_edges", r.same_face_edges},
          {"violations", r.violations},
          {"falsified", r.falsified()}};
}

json to_json(const BoundReport& r) {
  json j{{"schema", schema_version},
         {"n", r.n},
         {"k", r.k},
         {"mode", r.straight ? "straight-line" : "topological"},
         {"upper_bound", r.upper},
         {"citation", r.citation}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  if (r.edges) j["edges"] = *r.edges;
  if (r.fan_free) j["fan_free"] = *r.fan_free;
  if (r.verdict) j["verdict"] = to_string(*r.verdict);
  return j;
}

json to_json(const SearchResult& r) {
  json ex = json::array();
  for (const auto& s : r.extremal) ex.push_back(to_json(s));
  return {{"schema", schema_version},
          {"feasible", r.feasible},
          {"maximum", r.maximum},
          {"nodes", r.nodes},
          {"extremal", ex}};
}

json to_json(const NonexistenceArgument& a) {
  json facts = json::array();
  for (const auto& f : a.facts) facts.push_back({{"name", f.name}, {"value", f.value}, {"holds", f.holds}});
  return {{"n", a.n}, {"quadrangulation_edges", a.quadrangulation_edges}, {"facts", facts}, {"valid", a.valid()}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("cannot parse " + path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << dump(j);
}

}  // namespace fanfree
