#include "tdhom/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tdhom {

ColorPalette::ColorPalette(std::vector<std::string> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) throw input_error("palette must be nonempty");
    std::set<std::string> seen;
    for (const auto& c : colors_) {
        if (c.empty()) throw input_error("palette tokens must be nonempty");
        if (!seen.insert(c).second) throw input_error("palette tokens must be distinct: " + c);
    }
}

const std::string& ColorPalette::name(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(colors_.size()))
        throw input_error("color index out of range");
    return colors_[static_cast<std::size_t>(idx)];
}

std::optional<int> ColorPalette::index(std::string_view name) const {
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

int ColorPalette::require_index(std::string_view name) const {
    auto idx = index(name);
    if (!idx) throw input_error("color not in palette: " + std::string(name));
    return *idx;
}

ColorPalette ColorPalette::product() const {
    std::vector<std::string> out;
    out.reserve(colors_.size() * 2);
    for (const auto& c : colors_) {
        out.push_back(c + "|0");
        out.push_back(c + "|1");
    }
    return ColorPalette(std::move(out));
}

Graph::Graph(ColorPalette palette, std::vector<int> colors,
             std::vector<std::pair<int, int>> edges)
    : palette_(std::move(palette)), colors_(std::move(colors)) {
    const int n = order();
    for (int c : colors_)
        if (c < 0 || c >= static_cast<int>(palette_.size()))
            throw input_error("vertex color index out of palette range");
    std::set<std::pair<int, int>> norm;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("loops are not allowed");
        if (u > v) std::swap(u, v);
        if (!norm.insert({u, v}).second) throw input_error("duplicate edge");
    }
    edges_.assign(norm.begin(), norm.end());
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order())
        throw input_error("has_edge: vertex out of range");
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph quotient_delete(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw input_error("quotient_delete: vertex out of range");
    ColorPalette prod = g.palette().product();
    std::vector<int> colors;
    std::vector<int> newid(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        newid[static_cast<std::size_t>(u)] = next++;
        colors.push_back(2 * g.color(u) + (g.has_edge(u, v) ? 1 : 0));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back({newid[static_cast<std::size_t>(a)], newid[static_cast<std::size_t>(b)]});
    }
    return Graph(std::move(prod), std::move(colors), std::move(edges));
}

bool is_color_subgraph(const Graph& g, const std::vector<int>& embed, const Graph& f) {
    if (static_cast<int>(embed.size()) != g.order())
        throw input_error("is_color_subgraph: embedding size mismatch");
    if (g.palette() != f.palette())
        throw input_error("is_color_subgraph: palettes differ");
    std::set<int> used;
    for (int u = 0; u < g.order(); ++u) {
        int w = embed[static_cast<std::size_t>(u)];
        if (w < 0 || w >= f.order()) return false;
        if (!used.insert(w).second) return false;
        if (g.color(u) != f.color(w)) return false;
    }
    return true;
}

bool is_local_isomorphism(const Graph& g, const Graph& g2,
                          const std::vector<int>& vs, const std::vector<int>& vs2) {
    if (g.palette() != g2.palette())
        throw input_error("is_local_isomorphism: palettes differ");
    if (vs.size() != vs2.size())
        throw input_error("is_local_isomorphism: tuple lengths differ");
    const std::size_t len = vs.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (vs[i] < 0 || vs[i] >= g.order() || vs2[i] < 0 || vs2[i] >= g2.order())
            throw input_error("is_local_isomorphism: vertex out of range");
        if (g.color(vs[i]) != g2.color(vs2[i])) return false;
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            if ((vs[i] == vs[j]) != (vs2[i] == vs2[j])) return false;
            if (g.has_edge(vs[i], vs[j]) != g2.has_edge(vs2[i], vs2[j])) return false;
        }
    return true;
}

namespace {

// Single-source BFS distances; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

std::optional<int> radius(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    std::optional<int> best;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) {
            if (d < 0) return std::nullopt; // disconnected
            ecc = std::max(ecc, d);
        }
        if (!best || ecc < *best) best = ecc;
    }
    return best;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) return Graph();
    const ColorPalette& pal = gs.front().palette();
    std::vector<int> colors;
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const auto& g : gs) {
        if (g.palette() != pal) throw input_error("disjoint_union: palettes differ");
        for (int v = 0; v < g.order(); ++v) colors.push_back(g.color(v));
        for (auto [u, v] : g.edges()) edges.push_back({u + offset, v + offset});
        offset += g.order();
    }
    return Graph(pal, std::move(colors), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> colors;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.order()) throw input_error("induced_subgraph: vertex out of range");
        if (newid[static_cast<std::size_t>(v)] != -1)
            throw input_error("induced_subgraph: duplicate vertex");
        newid[static_cast<std::size_t>(v)] = static_cast<int>(i);
        colors.push_back(g.color(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = newid[static_cast<std::size_t>(u)];
        int b = newid[static_cast<std::size_t>(v)];
        if (a != -1 && b != -1) edges.push_back({a, b});
    }
    return Graph(g.palette(), std::move(colors), std::move(edges));
}

std::vector<Component> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<Component> out;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] != -1) continue;
        std::vector<int> members;
        std::queue<int> q;
        comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
        q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members.push_back(u);
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    q.push(w);
                }
        }
        std::sort(members.begin(), members.end());
        Component c;
        c.graph = induced_subgraph(g, members);
        c.vertices = std::move(members);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace tdhom
