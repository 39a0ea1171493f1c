#include "tdhom/decomposed.hpp"

#include <algorithm>

#include "tdhom/tree_depth.hpp"

namespace tdhom {

bool is_elimination_forest(const Graph& g, const RootedForest& t, bool single_root) {
    if (static_cast<int>(t.size()) != g.order())
        throw input_error("elimination check: vertex sets differ in size");
    for (int v = 0; v < g.order(); ++v)
        if (!t.contains(v)) throw input_error("elimination check: vertex sets differ");
    if (single_root && !t.is_tree())
        throw input_error("elimination check: tree must have exactly one root");
    for (auto [u, v] : g.edges())
        if (!t.comparable(u, v)) return false;
    return true;
}

Decomposed::Decomposed(Graph g, RootedForest t) : graph_(std::move(g)), tree_(std::move(t)) {
    if (graph_.order() == 0) throw input_error("decomposed graph must be nonempty");
    if (!is_elimination_forest(graph_, tree_, /*single_root=*/true))
        throw input_error("tree is not an elimination tree of the graph");
}

RootedSumResult rooted_sum(const std::vector<RootedSummand>& spec) {
    if (spec.empty()) throw input_error("rooted_sum: empty spec");
    const ColorPalette& pal = spec.front().part.graph().palette();
    const int root_color = spec.front().part.graph().color(spec.front().part.root());
    for (const auto& s : spec) {
        if (s.multiplicity < 1) throw input_error("rooted_sum: multiplicity must be >= 1");
        if (s.part.graph().palette() != pal) throw input_error("rooted_sum: palettes differ");
        if (s.part.graph().color(s.part.root()) != root_color)
            throw input_error("rooted_sum: root colors differ");
    }

    std::vector<int> colors{root_color};
    std::vector<std::pair<int, int>> edges;
    std::map<int, int> parents{{0, RootedForest::kNoParent}};
    RootedSumResult result;

    int next_id = 1;
    for (const auto& s : spec) {
        const Graph& g = s.part.graph();
        const RootedForest& t = s.part.tree();
        const int r = s.part.root();
        for (int copy = 0; copy < s.multiplicity; ++copy) {
            std::vector<int> map_ids(static_cast<std::size_t>(g.order()), -1);
            map_ids[static_cast<std::size_t>(r)] = 0;
            for (int v = 0; v < g.order(); ++v) {
                if (v == r) continue;
                map_ids[static_cast<std::size_t>(v)] = next_id++;
                colors.push_back(g.color(v));
            }
            for (auto [u, v] : g.edges())
                edges.push_back({map_ids[static_cast<std::size_t>(u)],
                                 map_ids[static_cast<std::size_t>(v)]});
            for (int v = 0; v < g.order(); ++v) {
                if (v == r) continue;
                int p = t.parent(v);
                parents[map_ids[static_cast<std::size_t>(v)]] = map_ids[static_cast<std::size_t>(p)];
            }
            result.copy_maps.push_back(std::move(map_ids));
        }
    }
    result.sum = Decomposed(Graph(pal, std::move(colors), std::move(edges)),
                            RootedForest(std::move(parents)));
    return result;
}

Decomposed make_decomposed(const Graph& g) {
    if (g.order() == 0) throw input_error("make_decomposed: empty graph");
    RootedForest w = tree_depth(g).witness;
    auto roots = w.roots();
    std::map<int, int> parents = w.parents();
    for (std::size_t i = 1; i < roots.size(); ++i) parents[roots[i]] = roots[0];
    return Decomposed(g, RootedForest(std::move(parents)));
}

} // namespace tdhom
