#include "tdhom/restricted.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "elimination_dp.hpp"
#include "tdhom/enumerate.hpp"

namespace tdhom {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Chain of v in root-first order (root, ..., parent, v).
std::vector<int> root_chain(const RootedForest& t, int v) {
    std::vector<int> chain = t.ancestors(v);
    std::reverse(chain.begin(), chain.end());
    chain.push_back(v);
    return chain;
}

} // namespace

HomCount pi_hom_count(const Decomposed& d, const Graph& g, const PinMap& pins) {
    if (d.graph().palette() != g.palette()) throw input_error("palettes differ");
    return detail::elimination_dp(d, g, pins, detail::ChainMode::Injective);
}

HomCount pp_hom_count(const Decomposed& d, const Graph& g, const PinMap& pins) {
    if (d.graph().palette() != g.palette()) throw input_error("palettes differ");
    return detail::elimination_dp(d, g, pins, detail::ChainMode::Reflecting);
}

PlacedGraph make_placed(const Decomposed& ambient, std::vector<int> vertices,
                        std::vector<std::pair<int, int>> edges) {
    std::set<int> vs;
    for (int v : vertices) {
        if (v < 0 || v >= ambient.order()) throw input_error("placed vertex out of range");
        if (!vs.insert(v).second) throw input_error("placed vertex repeated");
    }
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : edges) {
        if (!vs.count(a) || !vs.count(b)) throw input_error("placed edge endpoint missing");
        if (a == b) throw input_error("placed edge is a loop");
        if (!es.insert(norm_edge(a, b)).second) throw input_error("placed edge repeated");
    }
    PlacedGraph p;
    p.vertices.assign(vs.begin(), vs.end());
    p.edges.assign(es.begin(), es.end());
    return p;
}

Decomposed densify(const Decomposed& ambient, const PlacedGraph& p,
                   std::vector<int>* ambient_ids) {
    std::map<int, int> dense;
    std::vector<int> colors;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        dense[p.vertices[i]] = static_cast<int>(i);
        colors.push_back(ambient.graph().color(p.vertices[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : p.edges) edges.push_back({dense.at(a), dense.at(b)});
    RootedForest sub = induced_forest(ambient.tree(), p.vertices, /*require_tree=*/true);
    std::map<int, int> parents;
    for (auto [v, q] : sub.parents())
        parents[dense.at(v)] = (q == RootedForest::kNoParent) ? RootedForest::kNoParent
                                                              : dense.at(q);
    if (ambient_ids) *ambient_ids = p.vertices;
    return Decomposed(Graph(ambient.graph().palette(), std::move(colors), std::move(edges)),
                      RootedForest(std::move(parents)));
}

namespace {

// Enumerate idempotent ancestor-shrinking maps with no collapsed edge,
// calling visit(map, image) for each; map[v] = ambient image of v.
template <typename Visit>
void for_each_shrink_map(const Decomposed& d, Visit visit) {
    const Graph& g = d.graph();
    const RootedForest& t = d.tree();
    const int n = g.order();
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int a : root_chain(t, v))
            if (g.color(a) == g.color(v)) cands[static_cast<std::size_t>(v)].push_back(a);
        // root-first order; v itself is always last and always a candidate
    }
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int v = 0; v < n; ++v) map[static_cast<std::size_t>(v)] = cands[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]];
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int a = map[static_cast<std::size_t>(v)];
            if (map[static_cast<std::size_t>(a)] != a) ok = false; // idempotency
        }
        if (ok)
            for (auto [u, v] : g.edges())
                if (map[static_cast<std::size_t>(u)] == map[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
        if (ok) {
            PlacedGraph image;
            std::set<int> vs;
            for (int v = 0; v < n; ++v) vs.insert(map[static_cast<std::size_t>(v)]);
            image.vertices.assign(vs.begin(), vs.end());
            std::set<std::pair<int, int>> es;
            for (auto [u, v] : g.edges())
                es.insert(norm_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]));
            image.edges.assign(es.begin(), es.end());
            visit(map, image);
        }
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(n)) {
            if (++choice[i] < cands[i].size()) break;
            choice[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(n)) break;
    }
}

} // namespace

std::vector<PlacedGraph> shrink_images(const Decomposed& d) {
    std::set<PlacedGraph> images;
    for_each_shrink_map(d, [&](const std::vector<int>&, const PlacedGraph& img) {
        images.insert(img);
    });
    std::vector<PlacedGraph> out(images.begin(), images.end());
    std::sort(out.begin(), out.end(), [](const PlacedGraph& a, const PlacedGraph& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a < b;
    });
    return out;
}

HomCount s_epi_count(const Decomposed& d, const PlacedGraph& target) {
    const Graph& g = d.graph();
    const RootedForest& t = d.tree();
    const int n = g.order();
    std::set<int> tv(target.vertices.begin(), target.vertices.end());
    std::set<std::pair<int, int>> te(target.edges.begin(), target.edges.end());
    for (int v : target.vertices)
        if (v < 0 || v >= n) return 0;

    // Candidates: fixed on target vertices; strict same-color ancestors
    // inside the target elsewhere.
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (tv.count(v)) {
            cands[static_cast<std::size_t>(v)] = {v};
            continue;
        }
        for (int a : t.ancestors(v))
            if (tv.count(a) && g.color(a) == g.color(v)) cands[static_cast<std::size_t>(v)].push_back(a);
        if (cands[static_cast<std::size_t>(v)].empty()) return 0;
    }

    HomCount total = 0;
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int v = 0; v < n; ++v) map[static_cast<std::size_t>(v)] = cands[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]];
        bool ok = true;
        std::set<std::pair<int, int>> covered;
        for (auto [u, v] : g.edges()) {
            auto e = norm_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
            if (e.first == e.second || !te.count(e)) {
                ok = false;
                break;
            }
            covered.insert(e);
        }
        if (ok && covered.size() == te.size()) ++total;
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(n)) {
            if (++choice[i] < cands[i].size()) break;
            choice[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(n)) break;
    }
    return total;
}

HomCount s_epi_count(const Decomposed& d, const Graph& g, const std::vector<int>& embed) {
    if (!is_color_subgraph(g, embed, d.graph())) return 0;
    std::vector<int> vertices = embed;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.push_back(norm_edge(embed[static_cast<std::size_t>(u)], embed[static_cast<std::size_t>(v)]));
    return s_epi_count(d, make_placed(d, std::move(vertices), std::move(edges)));
}

Factorization factorize_hom(const Decomposed& d, const Graph& target,
                            const std::vector<int>& hom) {
    const Graph& f = d.graph();
    if (f.palette() != target.palette()) throw input_error("palettes differ");
    if (static_cast<int>(hom.size()) != f.order()) throw input_error("hom size mismatch");
    for (int v = 0; v < f.order(); ++v) {
        int w = hom[static_cast<std::size_t>(v)];
        if (w < 0 || w >= target.order()) throw input_error("hom image out of range");
        if (f.color(v) != target.color(w)) throw input_error("map does not preserve colors");
    }
    for (auto [u, v] : f.edges())
        if (!target.has_edge(hom[static_cast<std::size_t>(u)], hom[static_cast<std::size_t>(v)]))
            throw input_error("map does not preserve edges");

    Factorization out;
    out.shrink.resize(static_cast<std::size_t>(f.order()));
    for (int v = 0; v < f.order(); ++v) {
        // Nearest-to-root chain vertex sharing v's image.
        for (int a : root_chain(d.tree(), v))
            if (hom[static_cast<std::size_t>(a)] == hom[static_cast<std::size_t>(v)]) {
                out.shrink[static_cast<std::size_t>(v)] = a;
                break;
            }
    }
    std::set<int> vs;
    for (int v = 0; v < f.order(); ++v) vs.insert(out.shrink[static_cast<std::size_t>(v)]);
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : f.edges()) {
        auto e = norm_edge(out.shrink[static_cast<std::size_t>(u)], out.shrink[static_cast<std::size_t>(v)]);
        if (e.first == e.second) throw internal_error("factorization collapsed an edge");
        es.insert(e);
    }
    out.image.vertices.assign(vs.begin(), vs.end());
    out.image.edges.assign(es.begin(), es.end());
    for (int v : out.image.vertices) out.tail[v] = hom[static_cast<std::size_t>(v)];

    // The factorization must recompose and the tail must be injective on
    // the induced chains; both are structural guarantees, so violations are
    // internal errors.
    for (int v = 0; v < f.order(); ++v)
        if (out.tail.at(out.shrink[static_cast<std::size_t>(v)]) != hom[static_cast<std::size_t>(v)])
            throw internal_error("factorization does not recompose");
    RootedForest sub = induced_forest(d.tree(), out.image.vertices, /*require_tree=*/true);
    for (int v : out.image.vertices)
        for (int a : sub.ancestors(v))
            if (out.tail.at(a) == out.tail.at(v))
                throw internal_error("factorization tail not chain-injective");
    return out;
}

IdentityReport hom_factorization_identity_check(const Decomposed& d, const Graph& h) {
    IdentityReport rep;
    rep.lhs = hom_count(d.graph(), h);
    std::map<PlacedGraph, HomCount> groups;
    for_each_shrink_map(d, [&](const std::vector<int>&, const PlacedGraph& img) {
        groups[img] += 1;
    });
    rep.rhs = 0;
    for (const auto& [img, cnt] : groups)
        rep.rhs += cnt * pi_hom_count(densify(d, img), h);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

IdentityReport pihom_supergraph_identity_check(const Decomposed& d, const Graph& h) {
    IdentityReport rep;
    rep.lhs = pi_hom_count(d, h);
    rep.rhs = 0;
    for (const Decomposed& sup : enum_supergraphs_respecting(d)) rep.rhs += pp_hom_count(sup, h);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

TriangularSystem solve_pihom_from_hom(const Decomposed& base, const Graph& h) {
    TriangularSystem sys;
    sys.lower = true;
    std::vector<PlacedGraph> images = shrink_images(base);
    const std::size_t m = images.size();

    std::vector<std::vector<int>> ambient_ids(m);
    for (std::size_t i = 0; i < m; ++i)
        sys.family.push_back(densify(base, images[i], &ambient_ids[i]));
    sys.base_index = static_cast<int>(m) - 1;

    sys.matrix.assign(m, std::vector<HomCount>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        // Translate every candidate target into member i's dense ids.
        std::map<int, int> dense;
        for (std::size_t p = 0; p < ambient_ids[i].size(); ++p)
            dense[ambient_ids[i][p]] = static_cast<int>(p);
        for (std::size_t j = 0; j < m; ++j) {
            bool inside = true;
            for (int v : images[j].vertices)
                if (!dense.count(v)) {
                    inside = false;
                    break;
                }
            if (!inside) continue; // stays zero
            PlacedGraph tgt;
            for (int v : images[j].vertices) tgt.vertices.push_back(dense.at(v));
            std::sort(tgt.vertices.begin(), tgt.vertices.end());
            for (auto [a, b] : images[j].edges) tgt.edges.push_back(norm_edge(dense.at(a), dense.at(b)));
            std::sort(tgt.edges.begin(), tgt.edges.end());
            sys.matrix[i][j] = s_epi_count(sys.family[i], tgt);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.matrix[i][i] != 1) throw internal_error("diagonal is not one");
        for (std::size_t j = i + 1; j < m; ++j)
            if (sys.matrix[i][j] != 0) throw internal_error("matrix is not lower triangular");
    }

    sys.c.resize(m);
    for (std::size_t i = 0; i < m; ++i) sys.c[i] = hom_count(sys.family[i].graph(), h);
    sys.b.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        HomCount acc = sys.c[i];
        for (std::size_t j = 0; j < i; ++j) acc -= sys.matrix[i][j] * sys.b[j];
        sys.b[i] = acc;
    }
    sys.direct.resize(m);
    sys.matches = true;
    for (std::size_t i = 0; i < m; ++i) {
        sys.direct[i] = pi_hom_count(sys.family[i], h);
        if (sys.direct[i] != sys.b[i]) sys.matches = false;
    }
    return sys;
}

TriangularSystem solve_pphom_from_pihom(const Decomposed& base, const Graph& h) {
    TriangularSystem sys;
    sys.lower = false;
    sys.family = enum_supergraphs_respecting(base);
    const std::size_t m = sys.family.size();
    sys.base_index = 0;

    auto edge_subset = [](const Decomposed& a, const Decomposed& b) {
        const auto& eb = b.graph().edges();
        for (auto e : a.graph().edges())
            if (!std::binary_search(eb.begin(), eb.end(), e)) return false;
        return true;
    };

    sys.matrix.assign(m, std::vector<HomCount>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sys.matrix[i][j] = edge_subset(sys.family[i], sys.family[j]) ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.matrix[i][i] != 1) throw internal_error("diagonal is not one");
        for (std::size_t j = 0; j < i; ++j)
            if (sys.matrix[i][j] != 0) throw internal_error("matrix is not upper triangular");
    }

    sys.c.resize(m);
    for (std::size_t i = 0; i < m; ++i) sys.c[i] = pi_hom_count(sys.family[i], h);
    sys.b.assign(m, 0);
    for (std::size_t ii = m; ii-- > 0;) {
        HomCount acc = sys.c[ii];
        for (std::size_t j = ii + 1; j < m; ++j) acc -= sys.matrix[ii][j] * sys.b[j];
        sys.b[ii] = acc;
    }
    sys.direct.resize(m);
    sys.matches = true;
    for (std::size_t i = 0; i < m; ++i) {
        sys.direct[i] = pp_hom_count(sys.family[i], h);
        if (sys.direct[i] != sys.b[i]) sys.matches = false;
    }
    return sys;
}

CountEquivalenceReport count_equivalence_check(const Graph& g, const Graph& g2, int k,
                                               int size_bound) {
    return count_equivalence_check(g, g2,
                                   tdk_pattern_family(k, size_bound, g.palette()),
                                   enum_decomposed(k, size_bound, g.palette()));
}

CountEquivalenceReport count_equivalence_check(const Graph& g, const Graph& g2,
                                               const std::vector<Decomposed>& conn_patterns,
                                               const std::vector<Decomposed>& dec_patterns) {
    if (g.palette() != g2.palette()) throw input_error("palettes differ");
    CountEquivalenceReport rep;
    rep.hom_equal = true;
    for (const Decomposed& f : conn_patterns) {
        if (hom_count_td(f, g) != hom_count_td(f, g2)) {
            rep.hom_equal = false;
            rep.hom_witness = canonical_key(f.graph());
            break;
        }
    }
    rep.pihom_equal = true;
    rep.pphom_equal = true;
    for (const Decomposed& dset : dec_patterns) {
        if (rep.pihom_equal && pi_hom_count(dset, g) != pi_hom_count(dset, g2)) {
            rep.pihom_equal = false;
            rep.pihom_witness = canonical_key(dset);
        }
        if (rep.pphom_equal && pp_hom_count(dset, g) != pp_hom_count(dset, g2)) {
            rep.pphom_equal = false;
            rep.pphom_witness = canonical_key(dset);
        }
        if (!rep.pihom_equal && !rep.pphom_equal) break;
    }
    rep.agree = (rep.hom_equal == rep.pihom_equal) && (rep.pihom_equal == rep.pphom_equal);
    return rep;
}

} // namespace tdhom
