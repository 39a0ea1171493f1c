#include "tdhom/homcount.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "elimination_dp.hpp"
#include "tdhom/enumerate.hpp"
#include "tdhom/tree_depth.hpp"

namespace tdhom {

namespace {

void check_pins(const Graph& f, const Graph& g, const PinMap& pins) {
    for (auto [u, w] : pins) {
        if (u < 0 || u >= f.order()) throw input_error("pin source out of range");
        if (w < 0 || w >= g.order()) throw input_error("pin target out of range");
    }
}

void check_palettes(const Graph& f, const Graph& g) {
    if (f.palette() != g.palette()) throw input_error("pattern and target palettes differ");
}

// Enumerate all maps V(f) -> V(g) extending pins, calling visit(map).
// Guarded against absurd grids.
template <typename Visit>
void for_each_map(const Graph& f, const Graph& g, const PinMap& pins, Visit visit) {
    const int nf = f.order();
    const int ng = g.order();
    std::vector<int> free_vs;
    for (int v = 0; v < nf; ++v)
        if (!pins.count(v)) free_vs.push_back(v);
    if (ng == 0 && !free_vs.empty()) return;
    if (!free_vs.empty() &&
        std::pow(static_cast<double>(ng), static_cast<double>(free_vs.size())) > 2e9)
        throw capacity_error("exhaustive map space too large");

    std::vector<int> map(static_cast<std::size_t>(nf), 0);
    for (auto [u, w] : pins) map[static_cast<std::size_t>(u)] = w;
    std::vector<int> digit(free_vs.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_vs.size(); ++i)
            map[static_cast<std::size_t>(free_vs[i])] = digit[i];
        visit(map);
        std::size_t i = 0;
        while (i < digit.size()) {
            if (++digit[i] < ng) break;
            digit[i] = 0;
            ++i;
        }
        if (i == digit.size()) break;
    }
}

bool is_hom(const Graph& f, const Graph& g, const std::vector<int>& map) {
    for (int v = 0; v < f.order(); ++v)
        if (f.color(v) != g.color(map[static_cast<std::size_t>(v)])) return false;
    for (auto [u, v] : f.edges())
        if (!g.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

} // namespace

HomCount hom_count(const Graph& f, const Graph& g, const PinMap& pins) {
    check_palettes(f, g);
    check_pins(f, g, pins);
    HomCount total = 0;
    for_each_map(f, g, pins, [&](const std::vector<int>& map) {
        if (is_hom(f, g, map)) ++total;
    });
    return total;
}

HomCount emb_count(const Graph& f, const Graph& g, const PinMap& pins) {
    check_palettes(f, g);
    check_pins(f, g, pins);
    HomCount total = 0;
    for_each_map(f, g, pins, [&](const std::vector<int>& map) {
        std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
        for (int v = 0; v < f.order(); ++v) {
            auto w = static_cast<std::size_t>(map[static_cast<std::size_t>(v)]);
            if (used[w]) return;
            used[w] = true;
        }
        if (is_hom(f, g, map)) ++total;
    });
    return total;
}

HomCount epi_count(const Graph& f, const Graph& g, const PinMap& pins) {
    check_palettes(f, g);
    check_pins(f, g, pins);
    HomCount total = 0;
    for_each_map(f, g, pins, [&](const std::vector<int>& map) {
        if (!is_hom(f, g, map)) return;
        std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
        for (int v = 0; v < f.order(); ++v) hit[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] = true;
        for (bool h : hit)
            if (!h) return;
        std::set<std::pair<int, int>> covered;
        for (auto [u, v] : f.edges()) {
            int a = map[static_cast<std::size_t>(u)];
            int b = map[static_cast<std::size_t>(v)];
            covered.insert({std::min(a, b), std::max(a, b)});
        }
        if (covered.size() != g.edge_count()) return;
        ++total;
    });
    return total;
}

HomCount hom_count_td(const Decomposed& d, const Graph& g, const PinMap& pins) {
    check_palettes(d.graph(), g);
    check_pins(d.graph(), g, pins);
    return detail::elimination_dp(d, g, pins, detail::ChainMode::Any);
}

std::vector<Decomposed> tdk_pattern_family(int k, int size_bound, const ColorPalette& palette) {
    std::vector<Decomposed> out;
    for (const Graph& f : enum_conn_tdk(k, size_bound, palette)) out.push_back(make_decomposed(f));
    return out;
}

HomVector hom_vector(const Graph& g, int k, int size_bound,
                     const std::vector<Decomposed>& patterns) {
    HomVector hv;
    hv.k = k;
    hv.size_bound = size_bound;
    hv.palette = g.palette();
    for (const Decomposed& d : patterns)
        hv.entries.push_back({canonical_key(d.graph()), hom_count_td(d, g)});
    return hv;
}

HomVector hom_vector(const Graph& g, int k, int size_bound) {
    return hom_vector(g, k, size_bound, tdk_pattern_family(k, size_bound, g.palette()));
}

} // namespace tdhom
