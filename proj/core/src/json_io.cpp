#include "tdhom/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tdhom/errors.hpp"

namespace tdhom {

namespace {

int to_vertex_id(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + ": vertex id must be an integer");
    return j.get<int>();
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["palette"] = g.palette().names();
    Json vs = Json::array();
    for (int v = 0; v < g.order(); ++v)
        vs.push_back({{"id", v}, {"color", g.palette().name(g.color(v))}});
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& [u, v] : g.edges()) es.push_back({u, v});
    j["edges"] = std::move(es);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("graph json: expected an object");
    if (!j.contains("palette") || !j["palette"].is_array())
        throw input_error("graph json: missing palette array");
    std::vector<std::string> names;
    for (const auto& c : j["palette"]) {
        if (!c.is_string()) throw input_error("graph json: palette entries must be strings");
        names.push_back(c.get<std::string>());
    }
    ColorPalette palette(std::move(names));

    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("graph json: missing vertices array");
    std::map<int, int> color_of;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("color"))
            throw input_error("graph json: vertex entries need id and color");
        int id = to_vertex_id(v["id"], "graph json");
        if (!v["color"].is_string())
            throw input_error("graph json: vertex color must be a string");
        if (!color_of.emplace(id, palette.require_index(v["color"].get<std::string>())).second)
            throw input_error("graph json: duplicate vertex id");
    }
    const int n = static_cast<int>(color_of.size());
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (const auto& [id, c] : color_of) {
        if (id < 0 || id >= n) throw input_error("graph json: vertex ids must be dense 0..n-1");
        colors[static_cast<std::size_t>(id)] = c;
    }

    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw input_error("graph json: edges must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw input_error("graph json: edges must be [u,v] pairs");
            int u = to_vertex_id(e[0], "graph json");
            int v = to_vertex_id(e[1], "graph json");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("graph json: edge endpoint out of range");
            edges.emplace_back(u, v);
        }
    }
    return Graph(std::move(palette), std::move(colors), std::move(edges));
}

Json decomposed_to_json(const Decomposed& d) {
    Json j = graph_to_json(d.graph());
    Json parent = Json::object();
    for (const auto& [v, p] : d.tree().parents())
        if (p != RootedForest::kNoParent) parent[std::to_string(v)] = p;
    j["parent"] = std::move(parent);
    return j;
}

Decomposed decomposed_from_json(const Json& j) {
    Graph g = graph_from_json(j);
    if (!j.contains("parent") || !j["parent"].is_object())
        throw input_error("decomposed json: missing parent object");
    std::map<int, int> parents;
    for (int v = 0; v < g.order(); ++v) parents[v] = RootedForest::kNoParent;
    for (const auto& [key, value] : j["parent"].items()) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw input_error("decomposed json: parent keys must be vertex ids");
        }
        if (v < 0 || v >= g.order())
            throw input_error("decomposed json: parent key out of range");
        parents[v] = to_vertex_id(value, "decomposed json");
    }
    return Decomposed(std::move(g), RootedForest(std::move(parents)));
}

Graph graph_from_graph6(const std::string& line, const ColorPalette& palette) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw input_error("graph6: empty input");
    if (s[0] == '~') throw input_error("graph6: extended sizes (n > 62) not supported");
    for (char c : s)
        if (c < 63 || c > 126) throw input_error("graph6: byte out of range");

    const int n = s[0] - 63;
    const std::size_t bits_needed = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t chars_needed = (bits_needed + 5) / 6;
    if (s.size() != 1 + chars_needed) throw input_error("graph6: wrong length for stated order");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int byte = s[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    if (palette.size() == 0) throw input_error("graph6: empty palette");
    return Graph(palette, std::vector<int>(static_cast<std::size_t>(n), 0), std::move(edges));
}

Graph parse_graph_text(const std::string& text) {
    std::size_t at = 0;
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    if (at < text.size() && text[at] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw input_error(std::string("graph json: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::string line = text.substr(at);
    const std::size_t end = line.find_first_of("\r\n");
    if (end != std::string::npos) line.resize(end);
    return graph_from_graph6(line);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

Json placed_to_json(const PlacedGraph& p) {
    Json j;
    j["vertices"] = p.vertices;
    Json es = Json::array();
    for (const auto& [u, v] : p.edges) es.push_back({u, v});
    j["edges"] = std::move(es);
    return j;
}

std::string count_to_string(const HomCount& c) { return c.str(); }

} // namespace tdhom
