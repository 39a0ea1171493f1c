#include "tdhom/enumerate.hpp"

#include <algorithm>
#include <map>

#include "tdhom/tree_depth.hpp"

namespace tdhom {

namespace {

void check_bound(int n_max) {
    if (n_max < 0) throw input_error("enumeration bound must be nonnegative");
    if (n_max > kCanonicalBound) throw capacity_error("enumeration bound exceeds canonicalization bound");
}

} // namespace

std::vector<Graph> enum_graphs(int n_max, const ColorPalette& palette) {
    check_bound(n_max);
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(palette, {}, {})};
    out.push_back(level.front());
    for (int n = 1; n <= n_max; ++n) {
        std::map<CanonicalKey, Graph> next;
        for (const Graph& base : level) {
            for (int color = 0; color < static_cast<int>(palette.size()); ++color) {
                // New vertex n-1 attached to any subset of the old vertices.
                for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                    std::vector<int> colors = base.colors();
                    colors.push_back(color);
                    std::vector<std::pair<int, int>> edges = base.edges();
                    for (int u = 0; u < n - 1; ++u)
                        if (mask & (1u << u)) edges.push_back({u, n - 1});
                    auto canon = canonicalize(Graph(palette, std::move(colors), std::move(edges)));
                    next.emplace(std::move(canon.key), std::move(canon.form));
                }
            }
        }
        level.clear();
        for (auto& [key, g] : next) {
            (void)key;
            level.push_back(g);
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> enum_conn_tdk(int k, int n_max, const ColorPalette& palette) {
    if (k < 1) throw input_error("tree depth bound must be at least 1");
    std::vector<Graph> out;
    for (Graph& g : enum_graphs(n_max, palette)) {
        if (g.order() == 0) continue;
        if (connected_components(g).size() != 1) continue;
        if (tree_depth_value(g) > k) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<RootedForest> enum_elim_trees(const Graph& g, int k) {
    if (g.order() == 0) throw input_error("enum_elim_trees: empty graph");
    if (k < 1) throw input_error("height bound must be at least 1");
    const int n = g.order();
    std::vector<RootedForest> out;
    std::vector<int> parent(static_cast<std::size_t>(n), RootedForest::kNoParent);

    auto reaches_root = [&](int root) {
        for (int v = 0; v < n; ++v) {
            int cur = v, steps = 0;
            while (cur != root) {
                cur = parent[static_cast<std::size_t>(cur)];
                if (cur == RootedForest::kNoParent || ++steps > n) return false;
            }
        }
        return true;
    };

    for (int root = 0; root < n; ++root) {
        // parent[v] ranges over all vertices != v for every non-root v.
        std::vector<int> slots;
        for (int v = 0; v < n; ++v)
            if (v != root) slots.push_back(v);
        std::vector<int> choice(slots.size(), 0);
        while (true) {
            std::fill(parent.begin(), parent.end(), RootedForest::kNoParent);
            for (std::size_t i = 0; i < slots.size(); ++i) {
                int v = slots[i];
                int p = choice[i] < v ? choice[i] : choice[i] + 1; // skip v itself
                parent[static_cast<std::size_t>(v)] = p;
            }
            if (reaches_root(root)) {
                std::map<int, int> entries;
                for (int v = 0; v < n; ++v) entries[v] = parent[static_cast<std::size_t>(v)];
                RootedForest t(std::move(entries));
                if (t.height() <= k && is_elimination_forest(g, t, /*single_root=*/true))
                    out.push_back(std::move(t));
            }
            // Next choice vector (mixed radix, base n-1 per slot).
            std::size_t i = 0;
            while (i < slots.size()) {
                if (++choice[i] < n - 1) break;
                choice[i] = 0;
                ++i;
            }
            if (i == slots.size()) break;
        }
    }
    return out;
}

std::vector<Decomposed> enum_decomposed(int k, int n_max, const ColorPalette& palette) {
    check_bound(n_max);
    if (k < 1) throw input_error("height bound must be at least 1");
    std::vector<Decomposed> out;
    std::vector<Graph> graphs = enum_graphs(n_max, palette);
    std::size_t idx = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::map<CanonicalKey, Decomposed> classes;
        for (; idx < graphs.size() && graphs[idx].order() <= n; ++idx) {
            const Graph& g = graphs[idx];
            if (g.order() != n) continue;
            for (RootedForest& t : enum_elim_trees(g, k)) {
                auto canon = canonicalize(Decomposed(g, std::move(t)));
                classes.emplace(std::move(canon.key), std::move(canon.form));
            }
        }
        for (auto& [key, d] : classes) {
            (void)key;
            out.push_back(std::move(d));
        }
    }
    return out;
}

std::vector<Decomposed> enum_supergraphs_respecting(const Decomposed& d) {
    const Graph& g = d.graph();
    std::vector<std::pair<int, int>> slack;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && d.tree().comparable(u, v)) slack.push_back({u, v});
    if (slack.size() > 20) throw capacity_error("too many comparable non-edges");

    std::vector<Decomposed> out;
    for (unsigned mask = 0; mask < (1u << slack.size()); ++mask) {
        std::vector<std::pair<int, int>> edges = g.edges();
        for (std::size_t i = 0; i < slack.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slack[i]);
        out.push_back(Decomposed(Graph(g.palette(), g.colors(), std::move(edges)), d.tree()));
    }
    std::sort(out.begin(), out.end(), [](const Decomposed& a, const Decomposed& b) {
        if (a.graph().edge_count() != b.graph().edge_count())
            return a.graph().edge_count() < b.graph().edge_count();
        return a.graph().edges() < b.graph().edges();
    });
    return out;
}

} // namespace tdhom
