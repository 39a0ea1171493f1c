#pragma once

#include <string>

#include <json.hpp>

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/ints.hpp"
#include "tdhom/restricted.hpp"

namespace tdhom {

using Json = nlohmann::json;

// {"palette":[...], "vertices":[{"id":..,"color":..},...], "edges":[[u,v],...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Graph fields plus "parent": {"1":0, ...} with the root omitted.
Json decomposed_to_json(const Decomposed& d);
Decomposed decomposed_from_json(const Json& j);

// Standard short-form graph6 line (n <= 62); vertices take the palette's
// first color, default palette {"white"}.
Graph graph_from_graph6(const std::string& line, const ColorPalette& palette = ColorPalette({"white"}));

// JSON object when the text starts with '{' (after whitespace), graph6
// otherwise.
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

Json placed_to_json(const PlacedGraph& p);

// Counts serialize as decimal strings: no width assumptions downstream.
std::string count_to_string(const HomCount& c);

} // namespace tdhom
