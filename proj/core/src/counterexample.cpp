#include "tdhom/counterexample.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tdhom/errors.hpp"
#include "tdhom/games.hpp"
#include "tdhom/homcount.hpp"

namespace tdhom {

namespace {

constexpr int kMaxStarSize = 100000;

HomCount ipow(HomCount base, int e) {
    if (e == 0) return 1; // covers 0^0
    HomCount out = 1;
    for (int t = 0; t < e; ++t) out *= base;
    return out;
}

Rational rpow(const Rational& base, int e) {
    Rational out = 1;
    for (int t = 0; t < e; ++t) out *= base;
    return out;
}

// Exact Gaussian elimination with first-nonzero pivoting.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw internal_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t t = col; t < n; ++t) a[row][t] -= f * a[col][t];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = b[row];
        for (std::size_t t = row + 1; t < n; ++t) acc -= a[row][t] * x[t];
        x[row] = acc / a[row][row];
    }
    return x;
}

Decomposed single_vertex_decomposed(const Graph& g) {
    return Decomposed(g, RootedForest(std::map<int, int>{{0, RootedForest::kNoParent}}));
}

} // namespace

const ColorPalette& star_palette() {
    static const ColorPalette palette({"grey", "white", "black"});
    return palette;
}

Graph star(int p, int q) {
    if (p < 0 || q < 0) throw input_error("star: negative tip count");
    if (p + q + 1 > kMaxStarSize) throw capacity_error("star: too many tips");
    const int grey = 0, white = 1, black = 2;
    std::vector<int> colors{grey};
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < p; ++t) colors.push_back(white);
    for (int t = 0; t < q; ++t) colors.push_back(black);
    for (int v = 1; v <= p + q; ++v) edges.emplace_back(0, v);
    return Graph(star_palette(), std::move(colors), std::move(edges));
}

Decomposed star_decomposed(int p, int q) {
    Graph g = star(p, q);
    std::map<int, int> parents{{0, RootedForest::kNoParent}};
    for (int v = 1; v < g.order(); ++v) parents[v] = 0;
    return Decomposed(std::move(g), RootedForest(std::move(parents)));
}

HomCount star_hom(int i, int j, int p, int q) {
    if (i < 0 || j < 0 || p < 0 || q < 0) throw input_error("star_hom: negative argument");
    return ipow(p, i) * ipow(q, j);
}

StarPair build_star_pair(int m) {
    if (m < 1) throw input_error("build_star_pair: m must be >= 1");
    if (m > 8) throw capacity_error("build_star_pair: m too large");
    const int n = m + 1; // nodes q = 1..m+1

    // y with sum(y_t * (t+1)^j) = 0 for j = 1..m and sum(y_t) = a0 > 0:
    // solve the normalized system (right side e_0) and clear denominators.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    std::vector<Rational> rhs(static_cast<std::size_t>(n), 0);
    rhs[0] = 1;
    for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t)
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] =
                rpow(Rational(t + 1), j);
    const std::vector<Rational> x = solve_linear(std::move(a), std::move(rhs));

    HomCount scale = 1;
    for (const Rational& v : x)
        scale = boost::multiprecision::lcm(scale, HomCount(boost::multiprecision::denominator(v)));
    std::vector<HomCount> y;
    for (const Rational& v : x) {
        Rational scaled = v * Rational(scale);
        if (boost::multiprecision::denominator(scaled) != 1)
            throw internal_error("build_star_pair: denominator survived scaling");
        y.push_back(HomCount(boost::multiprecision::numerator(scaled)));
    }

    StarPair pair;
    pair.m = m;
    pair.a.assign(static_cast<std::size_t>(n), 0);
    pair.a2.assign(static_cast<std::size_t>(n), 0);
    HomCount sum = 0;
    for (int t = 0; t < n; ++t) {
        sum += y[static_cast<std::size_t>(t)];
        if (y[static_cast<std::size_t>(t)] >= 0)
            pair.a2[static_cast<std::size_t>(t)] = y[static_cast<std::size_t>(t)];
        else
            pair.a[static_cast<std::size_t>(t)] = -y[static_cast<std::size_t>(t)];
    }
    pair.a0 = sum;
    if (pair.a0 <= 0) throw internal_error("build_star_pair: nonpositive base count");
    for (int j = 1; j <= m; ++j) {
        HomCount moment = 0;
        for (int t = 0; t < n; ++t) moment += y[static_cast<std::size_t>(t)] * ipow(t + 1, j);
        if (moment != 0) throw internal_error("build_star_pair: unmatched moment");
    }

    HomCount vertices = pair.a0 * 2;
    for (int t = 0; t < n; ++t)
        vertices += (pair.a[static_cast<std::size_t>(t)] + pair.a2[static_cast<std::size_t>(t)]) *
                    (t + 3);
    if (vertices > kMaxStarSize) throw capacity_error("build_star_pair: graphs too large");

    auto assemble = [&](const HomCount& base, const std::vector<HomCount>& copies) {
        std::vector<Graph> blocks;
        for (HomCount c = 0; c < base; ++c) blocks.push_back(star(1, 0));
        for (int t = 0; t < n; ++t)
            for (HomCount c = 0; c < copies[static_cast<std::size_t>(t)]; ++c)
                blocks.push_back(star(1, t + 1));
        return disjoint_union(blocks);
    };
    pair.g = assemble(pair.a0, pair.a);
    pair.g2 = assemble(0, pair.a2);

    for (int i = 0; i <= m + 1; ++i)
        for (int j = 0; j <= m; ++j)
            pair.family.push_back({"S(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                   star(i, j), star_decomposed(i, j)});
    Graph w(star_palette(), {1}, {});
    Graph b(star_palette(), {2}, {});
    pair.family.push_back({"W", w, single_vertex_decomposed(w)});
    pair.family.push_back({"B", b, single_vertex_decomposed(b)});
    return pair;
}

bool check_fo2_sentence(const Graph& g) {
    const auto grey = g.palette().index("grey");
    const auto white = g.palette().index("white");
    const auto black = g.palette().index("black");
    if (!grey) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.color(v) != *grey) continue;
        bool has_white = false, has_black = false;
        for (int u : g.neighbors(v)) {
            if (white && g.color(u) == *white) has_white = true;
            if (black && g.color(u) == *black) has_black = true;
        }
        if (has_white && !has_black) return true;
    }
    return false;
}

StarPairVerification verify_star_pair(const StarPair& pair) {
    StarPairVerification v;
    v.family_hom_equal = true;
    for (const FamilyMember& member : pair.family) {
        if (hom_count_td(member.decomposed, pair.g) != hom_count_td(member.decomposed, pair.g2)) {
            v.family_hom_equal = false;
            v.family_witness = member.name;
            break;
        }
    }
    v.sentence_left = check_fo2_sentence(pair.g);
    v.sentence_right = check_fo2_sentence(pair.g2);
    v.fo2_game_separates = !fo_equivalent(pair.g, pair.g2, 2);
    v.orders_match = pair.g.order() == pair.g2.order();
    if (v.orders_match) v.ck2_equivalent = ck_equivalent(pair.g, pair.g2, 2);
    v.ok = v.family_hom_equal && v.sentence_left && !v.sentence_right &&
           v.fo2_game_separates && v.orders_match && v.ck2_equivalent == false;
    return v;
}

} // namespace tdhom
