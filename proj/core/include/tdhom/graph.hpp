#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdhom/errors.hpp"

namespace tdhom {

// Ordered list of distinct color tokens. Vertex colors are stored as indices
// into one of these; two graphs interoperate only when their palettes match.
class ColorPalette {
  public:
    ColorPalette() = default;
    explicit ColorPalette(std::vector<std::string> colors);

    std::size_t size() const { return colors_.size(); }
    const std::string& name(int idx) const;
    const std::vector<std::string>& names() const { return colors_; }
    std::optional<int> index(std::string_view name) const;
    int require_index(std::string_view name) const; // input_error if unknown

    // Palette for vertex-deletion quotients: each color c splits into
    // "c|0" (was not adjacent to the deleted vertex) and "c|1" (was).
    ColorPalette product() const;

    bool operator==(const ColorPalette& other) const = default;

  private:
    std::vector<std::string> colors_;
};

// Finite undirected vertex-colored simple graph. Vertex ids are dense
// 0..n-1; edges are stored normalized (u < v, sorted, no duplicates).
class Graph {
  public:
    Graph() = default;
    Graph(ColorPalette palette, std::vector<int> colors,
          std::vector<std::pair<int, int>> edges);

    int order() const { return static_cast<int>(colors_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const ColorPalette& palette() const { return palette_; }
    int color(int v) const { return colors_.at(v); }
    const std::vector<int>& colors() const { return colors_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

  private:
    ColorPalette palette_;
    std::vector<int> colors_;                 // palette index per vertex
    std::vector<std::pair<int, int>> edges_;  // normalized
    std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

// Delete v and remember, in the color of every survivor, whether it was
// adjacent to v. Survivors keep their relative order (old id -> new id is
// monotone). The result lives over palette().product().
Graph quotient_delete(const Graph& g, int v);

// True iff `embed` places every vertex of g on a vertex of f of the same
// color (injectively). Edges are not constrained.
bool is_color_subgraph(const Graph& g, const std::vector<int>& embed, const Graph& f);

// True iff vs -> vs2 (positionwise) is well defined, color preserving, and
// preserves equality and adjacency in both directions. Requires equal
// palettes and equal tuple lengths.
bool is_local_isomorphism(const Graph& g, const Graph& g2,
                          const std::vector<int>& vs, const std::vector<int>& vs2);

// Minimum eccentricity; nullopt when g is empty or disconnected.
std::optional<int> radius(const Graph& g);

// Disjoint union; block i's vertices are shifted by the sum of the previous
// orders. All inputs must share one palette (which the result keeps).
Graph disjoint_union(const std::vector<Graph>& gs);

struct Component {
    Graph graph;                // dense relabeling of the component
    std::vector<int> vertices;  // component's ids in the ambient graph,
                                // ascending; vertices[i] is the preimage of i
};

// Connected components, each densely relabeled, ordered by smallest
// ambient vertex id.
std::vector<Component> connected_components(const Graph& g);

// Induced subgraph on the given ambient vertices (ascending order expected);
// vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

} // namespace tdhom
