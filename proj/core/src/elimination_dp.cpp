#include "elimination_dp.hpp"

#include <functional>
#include <vector>

namespace tdhom::detail {

HomCount elimination_dp(const Decomposed& d, const Graph& g, const PinMap& pins,
                        ChainMode mode) {
    const Graph& f = d.graph();
    const RootedForest& t = d.tree();
    const int n = f.order();
    for (auto [u, w] : pins) {
        if (u < 0 || u >= n) throw input_error("pin source out of range");
        if (w < 0 || w >= g.order()) throw input_error("pin target out of range");
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int p = t.parent(v);
        if (p != RootedForest::kNoParent) children[static_cast<std::size_t>(p)].push_back(v);
    }
    std::vector<std::vector<int>> anc(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) anc[static_cast<std::size_t>(v)] = t.ancestors(v);

    // assign[v] = current image of v along the active root chain, else -1.
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::function<HomCount(int)> count = [&](int u) -> HomCount {
        HomCount total = 0;
        auto pin_it = pins.find(u);
        for (int w = 0; w < g.order(); ++w) {
            if (pin_it != pins.end() && w != pin_it->second) continue;
            if (f.color(u) != g.color(w)) continue;
            bool ok = true;
            for (int a : anc[static_cast<std::size_t>(u)]) {
                const int wa = assign[static_cast<std::size_t>(a)];
                const bool fadj = f.has_edge(a, u);
                const bool gadj = g.has_edge(wa, w);
                switch (mode) {
                    case ChainMode::Any:
                        ok = !(fadj && !gadj);
                        break;
                    case ChainMode::Injective:
                        ok = (w != wa) && !(fadj && !gadj);
                        break;
                    case ChainMode::Reflecting:
                        ok = (w != wa) && (fadj == gadj);
                        break;
                }
                if (!ok) break;
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(u)] = w;
            HomCount prod = 1;
            for (int c : children[static_cast<std::size_t>(u)]) {
                prod *= count(c);
                if (prod == 0) break;
            }
            assign[static_cast<std::size_t>(u)] = -1;
            total += prod;
        }
        return total;
    };
    return count(t.root());
}

} // namespace tdhom::detail
