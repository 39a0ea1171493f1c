#include "tdhom/tree_depth.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace tdhom {

namespace {

std::shared_mutex cache_mutex;
std::map<CanonicalKey, int> depth_cache;

Graph delete_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(g.order()) - 1);
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

int value_rec(const Graph& g);

int value_connected(const Graph& g) {
    if (g.order() == 1) return 1;
    CanonicalKey key = canonical_key(g);
    {
        std::shared_lock lock(cache_mutex);
        auto it = depth_cache.find(key);
        if (it != depth_cache.end()) return it->second;
    }
    int best = g.order(); // a chain tree always works
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, 1 + value_rec(delete_vertex(g, v)));
    {
        std::unique_lock lock(cache_mutex);
        depth_cache.emplace(key, best);
    }
    return best;
}

int value_rec(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() == 1) return value_connected(g);
    int best = 0;
    for (const auto& c : comps) best = std::max(best, value_connected(c.graph));
    return best;
}

// Witness parent arrays are compared in ascending vertex order, roots
// encoded as -1; the smallest array wins ties between optimal roots.
std::vector<int> serialize(const RootedForest& f, const std::vector<int>& vertices) {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(f.parent(v));
    return out;
}

// Witness over g's own vertex ids.
RootedForest witness_rec(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        std::map<int, int> merged;
        for (const auto& c : comps) {
            RootedForest w = witness_rec(c.graph);
            for (auto [v, p] : w.parents())
                merged[c.vertices[static_cast<std::size_t>(v)]] =
                    (p == RootedForest::kNoParent)
                        ? RootedForest::kNoParent
                        : c.vertices[static_cast<std::size_t>(p)];
        }
        return RootedForest(std::move(merged));
    }
    const int n = g.order();
    if (n == 1) return RootedForest(std::map<int, int>{{0, RootedForest::kNoParent}});
    const int depth = value_connected(g);
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;

    bool have_best = false;
    std::vector<int> best_ser;
    std::map<int, int> best_parents;
    for (int v = 0; v < n; ++v) {
        Graph rest = delete_vertex(g, v);
        if (1 + value_rec(rest) != depth) continue;
        RootedForest sub = witness_rec(rest); // ids are rest's dense ids
        std::map<int, int> parents;
        parents[v] = RootedForest::kNoParent;
        auto old_id = [&](int dense) { return dense < v ? dense : dense + 1; };
        for (auto [u, p] : sub.parents())
            parents[old_id(u)] = (p == RootedForest::kNoParent) ? v : old_id(p);
        RootedForest cand(parents);
        auto ser = serialize(cand, ids);
        if (!have_best || ser < best_ser) {
            have_best = true;
            best_ser = std::move(ser);
            best_parents = std::move(parents);
        }
    }
    if (!have_best) throw internal_error("tree depth witness search failed");
    return RootedForest(std::move(best_parents));
}

} // namespace

int tree_depth_value(const Graph& g) {
    if (g.order() == 0) throw input_error("tree depth of the empty graph");
    return value_rec(g);
}

TreeDepthResult tree_depth(const Graph& g) {
    if (g.order() == 0) throw input_error("tree depth of the empty graph");
    TreeDepthResult r;
    r.depth = value_rec(g);
    r.witness = witness_rec(g);
    return r;
}

} // namespace tdhom
