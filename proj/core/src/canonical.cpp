#include "tdhom/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace tdhom {

namespace {

// Per-position description of a placed vertex: its color, its tree parent's
// position (-1 when rootless/plain graph), and its adjacency bits towards
// the already placed vertices. Sequences of these are compared
// lexicographically; the canonical labeling is the minimizing placement.
struct PosTuple {
    int color = 0;
    int parent_pos = -1;
    std::vector<char> bits;

    auto operator<=>(const PosTuple&) const = default;
};

struct Search {
    const Graph& g;
    const RootedForest* tree; // nullptr for plain graphs
    int n;
    std::vector<int> placed;       // placed[pos] = vertex
    std::vector<int> pos_of;       // pos_of[vertex] = position or -1
    std::vector<PosTuple> current;
    std::vector<PosTuple> best;
    std::vector<int> best_order;
    bool have_best = false;

    explicit Search(const Graph& graph, const RootedForest* t)
        : g(graph), tree(t), n(graph.order()) {
        pos_of.assign(static_cast<std::size_t>(n), -1);
    }

    PosTuple tuple_for(int v) const {
        PosTuple t;
        t.color = g.color(v);
        if (tree) {
            int p = tree->parent(v);
            t.parent_pos = (p == RootedForest::kNoParent) ? -1 : pos_of[static_cast<std::size_t>(p)];
        }
        t.bits.reserve(placed.size());
        for (int u : placed) t.bits.push_back(g.has_edge(v, u) ? 1 : 0);
        return t;
    }

    bool placeable(int v) const {
        if (pos_of[static_cast<std::size_t>(v)] != -1) return false;
        if (!tree) return true;
        int p = tree->parent(v);
        return p == RootedForest::kNoParent || pos_of[static_cast<std::size_t>(p)] != -1;
    }

    // v and w lead to identical subtrees when swapping them is an
    // automorphism fixing everything else; keeping one of them is enough.
    bool interchangeable(int v, int w) const {
        for (int u = 0; u < n; ++u) {
            if (u == v || u == w || pos_of[static_cast<std::size_t>(u)] != -1) continue;
            if (g.has_edge(v, u) != g.has_edge(w, u)) return false;
            if (tree) {
                int p = tree->parent(u);
                if (p == v || p == w) return false;
            }
        }
        return true;
    }

    void dfs() {
        const int pos = static_cast<int>(placed.size());
        if (pos == n) {
            if (!have_best || current < best) {
                best = current;
                best_order = placed;
                have_best = true;
            }
            return;
        }
        // Only position-minimal tuples can start a minimal completion.
        std::vector<std::pair<PosTuple, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (!placeable(v)) continue;
            PosTuple t = tuple_for(v);
            if (!cands.empty() && t > cands.front().first) continue;
            if (!cands.empty() && t < cands.front().first) cands.clear();
            cands.push_back({std::move(t), v});
        }
        // Drop candidates interchangeable with an earlier one.
        std::vector<std::pair<PosTuple, int>> kept;
        for (auto& c : cands) {
            bool dup = false;
            for (auto& k : kept)
                if (interchangeable(k.second, c.second)) {
                    dup = true;
                    break;
                }
            if (!dup) kept.push_back(std::move(c));
        }
        for (auto& [t, v] : kept) {
            placed.push_back(v);
            pos_of[static_cast<std::size_t>(v)] = pos;
            current.push_back(t);
            dfs();
            current.pop_back();
            pos_of[static_cast<std::size_t>(v)] = -1;
            placed.pop_back();
        }
    }
};

std::string encode(const ColorPalette& pal, const std::vector<PosTuple>& tuples, bool with_tree) {
    std::ostringstream os;
    os << (with_tree ? "D" : "G") << tuples.size() << "|";
    for (const auto& c : pal.names()) os << c << ",";
    os << "|";
    for (const auto& t : tuples) {
        os << t.color;
        if (with_tree) os << "^" << t.parent_pos;
        os << ":";
        for (char b : t.bits) os << (b ? '1' : '0');
        os << ";";
    }
    return os.str();
}

std::vector<PosTuple> run(const Graph& g, const RootedForest* tree, int bound,
                          std::vector<int>& order_out) {
    if (g.order() > bound) throw capacity_error("canonicalization bound exceeded");
    Search s(g, tree);
    if (g.order() == 0) {
        order_out.clear();
        return {};
    }
    s.dfs();
    if (!s.have_best) throw internal_error("canonical search found no labeling");
    order_out = s.best_order;
    return s.best;
}

} // namespace

CanonicalGraph canonicalize(const Graph& g, int bound) {
    CanonicalGraph out;
    auto tuples = run(g, nullptr, bound, out.vertex_order);
    out.key = encode(g.palette(), tuples, false);
    const int n = g.order();
    std::vector<int> newid(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos)
        newid[static_cast<std::size_t>(out.vertex_order[static_cast<std::size_t>(pos)])] = pos;
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        colors[static_cast<std::size_t>(newid[static_cast<std::size_t>(v)])] = g.color(v);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({newid[static_cast<std::size_t>(u)], newid[static_cast<std::size_t>(v)]});
    out.form = Graph(g.palette(), std::move(colors), std::move(edges));
    return out;
}

CanonicalDecomposed canonicalize(const Decomposed& d, int bound) {
    CanonicalDecomposed out;
    auto tuples = run(d.graph(), &d.tree(), bound, out.vertex_order);
    out.key = encode(d.graph().palette(), tuples, true);
    const int n = d.order();
    std::vector<int> newid(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos)
        newid[static_cast<std::size_t>(out.vertex_order[static_cast<std::size_t>(pos)])] = pos;
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        colors[static_cast<std::size_t>(newid[static_cast<std::size_t>(v)])] = d.graph().color(v);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.graph().edges())
        edges.push_back({newid[static_cast<std::size_t>(u)], newid[static_cast<std::size_t>(v)]});
    std::map<int, int> parents;
    for (int v = 0; v < n; ++v) {
        int p = d.tree().parent(v);
        parents[newid[static_cast<std::size_t>(v)]] =
            (p == RootedForest::kNoParent) ? RootedForest::kNoParent
                                           : newid[static_cast<std::size_t>(p)];
    }
    out.form = Decomposed(Graph(d.graph().palette(), std::move(colors), std::move(edges)),
                          RootedForest(std::move(parents)));
    return out;
}

CanonicalKey canonical_key(const Graph& g, int bound) {
    std::vector<int> order;
    auto tuples = run(g, nullptr, bound, order);
    return encode(g.palette(), tuples, false);
}

CanonicalKey canonical_key(const Decomposed& d, int bound) {
    std::vector<int> order;
    auto tuples = run(d.graph(), &d.tree(), bound, order);
    return encode(d.graph().palette(), tuples, true);
}

} // namespace tdhom
