#pragma once

#include "fanfree/bounds.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/decompose.hpp"
#include "fanfree/drawing.hpp"
#include "fanfree/star.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace fanfree {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

/// integer JSON value when it fits in 64 bits, decimal string otherwise
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j);

json to_json(const Graph& g);
json to_json(const StraightLineDrawing& d);
json to_json(const AbstractDrawing& d);
json to_json(const Drawing& d);

/**
 * @brief Parses a drawing document.
 *
 * Documents with "coords" become straight-line drawings; others become abstract drawings.
 * @throws Error on malformed documents or invalid graphs
 */
Drawing drawing_from_json(const json& j);

json to_json(const StarConfig& s);
StarConfig star_from_json(const json& j);

json to_json(const FanWitness& w);
json to_json(const SimplicityReport& r);
json to_json(const DecompositionReport& r);
json to_json(const BoundReport& r);
json to_json(const SearchResult& r);
json to_json(const NonexistenceArgument& a);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
/// deterministic pretty-printed form with trailing newline
std::string dump(const json& j);

}  // namespace fanfree
