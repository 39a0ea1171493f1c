#include "tdhom/suites.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "tdhom/canonical.hpp"
#include "tdhom/counterexample.hpp"
#include "tdhom/enumerate.hpp"
#include "tdhom/errors.hpp"
#include "tdhom/games.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/restricted.hpp"
#include "tdhom/tree_depth.hpp"
#include "tdhom/witness.hpp"

namespace tdhom {

namespace {

ColorPalette one_color() { return ColorPalette({"white"}); }
ColorPalette two_colors() { return ColorPalette({"white", "black"}); }

// Runs work(0..total-1) across `jobs` striding threads; the violation
// messages come back merged in work-item order.
std::vector<std::string> run_sharded(
    int jobs, std::size_t total,
    const std::function<void(std::size_t, std::vector<std::string>&)>& work) {
    const int workers =
        std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(total, 1024))));
    std::vector<std::vector<std::pair<std::size_t, std::string>>> found(
        static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto shard = [&](int w) {
        std::vector<std::string> sink;
        for (std::size_t i = static_cast<std::size_t>(w); i < total;
             i += static_cast<std::size_t>(workers)) {
            sink.clear();
            work(i, sink);
            for (auto& msg : sink)
                found[static_cast<std::size_t>(w)].emplace_back(i, std::move(msg));
        }
    };

    if (workers == 1) {
        shard(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    shard(w);
                } catch (...) {
                    failures[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (const auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    std::vector<std::pair<std::size_t, std::string>> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    std::vector<std::string> out;
    out.reserve(all.size());
    for (auto& [idx, msg] : all) out.push_back(std::move(msg));
    return out;
}

Graph cycle6() {
    return Graph(one_color(), std::vector<int>(6, 0),
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Graph two_triangles() {
    return Graph(one_color(), std::vector<int>(6, 0),
                 {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// All color- and edge-preserving maps f -> h, as id vectors.
std::vector<std::vector<int>> all_homs(const Graph& f, const Graph& h) {
    std::vector<std::vector<int>> out;
    const int nf = f.order(), nh = h.order();
    if (nf == 0) {
        out.push_back({});
        return out;
    }
    if (nh == 0) return out;
    std::vector<int> map(static_cast<std::size_t>(nf), 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < nf && ok; ++v)
            ok = f.color(v) == h.color(map[static_cast<std::size_t>(v)]);
        for (const auto& [u, v] : f.edges()) {
            if (!ok) break;
            ok = h.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
        }
        if (ok) out.push_back(map);
        int at = nf - 1;
        while (at >= 0 && ++map[static_cast<std::size_t>(at)] == nh)
            map[static_cast<std::size_t>(at--)] = 0;
        if (at < 0) break;
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

SuiteResult finish(std::string name, Json config, Json data,
                   std::vector<std::string> violations, const Timer& timer) {
    SuiteResult r;
    r.name = name;
    r.violations = static_cast<int>(violations.size());
    r.report = Json{{"schema", "tdhom-report/1"},
                    {"suite", std::move(name)},
                    {"config", std::move(config)},
                    {"data", std::move(data)},
                    {"violations", std::move(violations)},
                    {"seconds", timer.seconds()}};
    return r;
}

SuiteResult suite_main(const SuiteOptions& opts) {
    Timer timer;
    const ColorPalette pal = one_color();
    const int n_max = opts.full ? 5 : 4;
    const int budget = opts.full ? 7 : 5;
    std::vector<std::string> violations;
    Json data;

    Json per_k = Json::array();
    for (int k = 1; k <= 3; ++k) {
        EquivalenceSurvey s = equivalence_survey(n_max, k, pal, budget, opts.jobs);
        per_k.push_back({{"k", k},
                         {"pairs", s.pairs_tested},
                         {"equivalent", s.equivalent_pairs},
                         {"distinguished", s.distinguished_pairs},
                         {"order_mismatch", s.order_mismatch_pairs},
                         {"budget_exhausted", s.budget_exhausted}});
        for (const auto& v : s.violations)
            violations.push_back("k=" + std::to_string(k) + " " + v.left + " vs " + v.right +
                                 ": " + v.what);
    }
    data["survey"] = std::move(per_k);

    // Signature pair: the 6-cycle against two triangles.
    {
        const Graph c6 = cycle6();
        const Graph tt = two_triangles();
        const bool eq2 = ck_equivalent(c6, tt, 2);
        const bool eq3 = ck_equivalent(c6, tt, 3);
        DistinguishResult dr = distinguishing_pattern(c6, tt, 3, budget);
        const Graph k3(one_color(), {0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}});
        if (!eq2) violations.push_back("signature: C6 vs 2K3 must be 2-round equivalent");
        if (eq3) violations.push_back("signature: C6 vs 2K3 must not be 3-round equivalent");
        if (!dr.pattern)
            violations.push_back("signature: no distinguishing pattern found");
        else if (canonical_key(*dr.pattern) != canonical_key(k3))
            violations.push_back("signature: first distinguishing pattern is not the triangle");
        else if (dr.left_count != 0 || dr.right_count != 12)
            violations.push_back("signature: triangle counts differ from 0 and 12");
        data["signature"] = {{"eq2", eq2},
                             {"eq3", eq3},
                             {"witness_left", count_to_string(dr.left_count)},
                             {"witness_right", count_to_string(dr.right_count)}};
    }

    // The three counting conditions must render one verdict per pair.
    {
        const int agree_n = opts.full ? 4 : 3;
        const int agree_budget = opts.full ? 5 : 3;
        const std::vector<Graph> pool = enum_graphs(agree_n, pal);
        int agree_pairs = 0;
        for (int k = 1; k <= 3; ++k) {
            const auto conn = tdk_pattern_family(k, agree_budget, pal);
            const auto dec = enum_decomposed(k, agree_budget, pal);
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = i + 1; j < pool.size(); ++j) pairs.emplace_back(i, j);
            agree_pairs += static_cast<int>(pairs.size());
            auto found = run_sharded(
                opts.jobs, pairs.size(), [&](std::size_t p, std::vector<std::string>& sink) {
                    const auto [i, j] = pairs[p];
                    CountEquivalenceReport rep =
                        count_equivalence_check(pool[i], pool[j], conn, dec);
                    if (!rep.agree)
                        sink.push_back("verdicts disagree (k=" + std::to_string(k) + ") on " +
                                       canonical_key(pool[i]) + " vs " + canonical_key(pool[j]));
                });
            violations.insert(violations.end(), found.begin(), found.end());
        }
        data["agreement_pairs"] = agree_pairs;
    }

    Json config{{"n_max", n_max}, {"budget", budget}, {"jobs", opts.jobs}, {"full", opts.full}};
    return finish("main", std::move(config), std::move(data), std::move(violations), timer);
}

SuiteResult suite_lovasz(const SuiteOptions& opts) {
    Timer timer;
    const ColorPalette pal = two_colors();
    const int d_n = opts.full ? 4 : 3;
    const int h_n = opts.full ? 4 : 3;
    const int bij_h_n = opts.full ? 3 : 2;
    std::vector<std::string> violations;

    const std::vector<Decomposed> patterns = enum_decomposed(3, d_n, pal);
    const std::vector<Graph> targets = enum_graphs(h_n, pal);
    auto found = run_sharded(
        opts.jobs, patterns.size(), [&](std::size_t i, std::vector<std::string>& sink) {
            for (const Graph& h : targets) {
                IdentityReport r1 = hom_factorization_identity_check(patterns[i], h);
                if (!r1.equal)
                    sink.push_back("shrink-image identity fails: " + canonical_key(patterns[i]) +
                                   " into " + canonical_key(h));
                IdentityReport r2 = pihom_supergraph_identity_check(patterns[i], h);
                if (!r2.equal)
                    sink.push_back("supergraph identity fails: " + canonical_key(patterns[i]) +
                                   " into " + canonical_key(h));
            }
        });
    violations.insert(violations.end(), found.begin(), found.end());

    // Factorization is a bijection: distinct triples, each recomposing.
    const std::vector<Decomposed> bij_patterns = enum_decomposed(d_n, d_n, pal);
    const std::vector<Graph> bij_targets = enum_graphs(bij_h_n, pal);
    auto found2 = run_sharded(
        opts.jobs, bij_patterns.size(), [&](std::size_t i, std::vector<std::string>& sink) {
            const Decomposed& d = bij_patterns[i];
            for (const Graph& h : bij_targets) {
                const auto homs = all_homs(d.graph(), h);
                std::set<std::tuple<PlacedGraph, std::vector<int>, std::map<int, int>>> triples;
                for (const auto& hom : homs) {
                    Factorization f = factorize_hom(d, h, hom);
                    for (int u = 0; u < d.order(); ++u) {
                        if (f.tail.at(f.shrink[static_cast<std::size_t>(u)]) !=
                            hom[static_cast<std::size_t>(u)]) {
                            sink.push_back("factorization does not recompose: " +
                                           canonical_key(d) + " into " + canonical_key(h));
                            break;
                        }
                    }
                    triples.insert({f.image, f.shrink, f.tail});
                }
                if (triples.size() != homs.size())
                    sink.push_back("factorization not injective: " + canonical_key(d) +
                                   " into " + canonical_key(h));
            }
        });
    violations.insert(violations.end(), found2.begin(), found2.end());

    Json config{{"pattern_n", d_n}, {"target_n", h_n},   {"bijection_target_n", bij_h_n},
                {"jobs", opts.jobs}, {"full", opts.full}};
    Json data{{"patterns", patterns.size()},
              {"targets", targets.size()},
              {"bijection_patterns", bij_patterns.size()},
              {"bijection_targets", bij_targets.size()}};
    return finish("lovasz-decomp", std::move(config), std::move(data), std::move(violations),
                  timer);
}

SuiteResult suite_triangular(const SuiteOptions& opts) {
    Timer timer;
    const ColorPalette pal = two_colors();
    const int d_n = opts.full ? 4 : 3;
    const int h_n = opts.full ? 4 : 3;
    std::vector<std::string> violations;

    const std::vector<Decomposed> bases = enum_decomposed(d_n, d_n, pal);
    const std::vector<Graph> targets = enum_graphs(h_n, pal);

    auto check_shape = [](const TriangularSystem& sys, bool lower, std::string& err) {
        const std::size_t n = sys.family.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (sys.matrix[i][i] != 1) {
                err = "diagonal entry differs from one";
                return false;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const bool must_be_zero = lower ? j > i : j < i;
                if (must_be_zero && sys.matrix[i][j] != 0) {
                    err = lower ? "entry above the diagonal" : "entry below the diagonal";
                    return false;
                }
            }
        }
        return true;
    };

    auto found = run_sharded(
        opts.jobs, bases.size(), [&](std::size_t i, std::vector<std::string>& sink) {
            const Decomposed& base = bases[i];
            for (const Graph& h : targets) {
                TriangularSystem lo = solve_pihom_from_hom(base, h);
                std::string err;
                if (!lo.lower || !check_shape(lo, true, err))
                    sink.push_back("lower system malformed (" + err + "): " +
                                   canonical_key(base) + " into " + canonical_key(h));
                else if (!lo.matches)
                    sink.push_back("lower solve mismatch: " + canonical_key(base) + " into " +
                                   canonical_key(h));
                TriangularSystem up = solve_pphom_from_pihom(base, h);
                if (up.lower || !check_shape(up, false, err))
                    sink.push_back("upper system malformed (" + err + "): " +
                                   canonical_key(base) + " into " + canonical_key(h));
                else if (!up.matches)
                    sink.push_back("upper solve mismatch: " + canonical_key(base) + " into " +
                                   canonical_key(h));
            }
        });
    violations.insert(violations.end(), found.begin(), found.end());

    Json config{{"base_n", d_n}, {"target_n", h_n}, {"jobs", opts.jobs}, {"full", opts.full}};
    Json data{{"bases", bases.size()}, {"targets", targets.size()}};
    return finish("triangular", std::move(config), std::move(data), std::move(violations), timer);
}

SuiteResult suite_lemma4(const SuiteOptions& opts) {
    Timer timer;
    const int trials = opts.full ? 200 : 50;
    std::mt19937 rng(990131);
    std::vector<std::string> violations;

    for (int trial = 0; trial < trials; ++trial) {
        const int l = std::uniform_int_distribution<int>(1, 5)(rng);
        const int m = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::vector<HomCount>> rows;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            rows.clear();
            std::set<std::vector<HomCount>> seen;
            for (int i = 0; i < l; ++i) {
                std::vector<HomCount> row;
                for (int j = 0; j < m; ++j)
                    row.push_back(std::uniform_int_distribution<int>(1, 5)(rng));
                seen.insert(row);
                rows.push_back(std::move(row));
            }
            if (seen.size() == static_cast<std::size_t>(l)) break;
        }

        const std::vector<int> d = exponent_vector(rows);
        const std::string tag = "trial " + std::to_string(trial);
        if (d.size() != static_cast<std::size_t>(m)) {
            violations.push_back(tag + ": wrong exponent count");
            continue;
        }
        for (int e : d)
            if (e < 1 || e > l * l) violations.push_back(tag + ": exponent out of bounds");
        std::set<HomCount> products;
        for (const auto& row : rows) {
            HomCount prod = 1;
            for (int j = 0; j < m; ++j)
                for (int rep = 0; rep < d[static_cast<std::size_t>(j)]; ++rep)
                    prod *= row[static_cast<std::size_t>(j)];
            products.insert(prod);
        }
        if (products.size() != rows.size())
            violations.push_back(tag + ": products not distinct");
    }

    Json config{{"trials", trials}, {"jobs", opts.jobs}, {"full", opts.full}};
    Json data{{"seed", 990131}};
    return finish("lemma4", std::move(config), std::move(data), std::move(violations), timer);
}

SuiteResult suite_wr(const SuiteOptions& opts) {
    Timer timer;
    const int samples = opts.full ? 100 : 40;
    std::mt19937 rng(771231);
    std::vector<std::string> violations;

    std::map<int, std::vector<Graph>> by_order;
    for (Graph& g : enum_graphs(4, two_colors()))
        if (g.order() >= 2) by_order[g.order()].push_back(std::move(g));
    std::vector<int> orders;
    for (const auto& [o, gs] : by_order) orders.push_back(o);

    int drawn = 0;
    for (int s = 0; s < samples; ++s) {
        const Graph* g = nullptr;
        const Graph* g2 = nullptr;
        int v = -1, v2 = -1;
        for (int attempt = 0; attempt < 1000 && v2 < 0; ++attempt) {
            const int o = orders[std::uniform_int_distribution<std::size_t>(
                0, orders.size() - 1)(rng)];
            const auto& pool = by_order[o];
            g = &pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            g2 = &pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            v = std::uniform_int_distribution<int>(0, g->order() - 1)(rng);
            std::vector<int> matching;
            for (int u = 0; u < g2->order(); ++u)
                if (g2->color(u) == g->color(v)) matching.push_back(u);
            if (!matching.empty())
                v2 = matching[std::uniform_int_distribution<std::size_t>(
                    0, matching.size() - 1)(rng)];
        }
        if (v2 < 0) continue;
        ++drawn;

        const Graph qg = quotient_delete(*g, v);
        const Graph qg2 = quotient_delete(*g2, v2);
        for (int k = 1; k <= 3; ++k) {
            const bool lhs = ck_equivalent(*g, *g2, k, {v}, {v2});
            const bool rhs = ck_equivalent(qg, qg2, k);
            if (lhs != rhs)
                violations.push_back("sample " + std::to_string(s) + " k=" + std::to_string(k) +
                                     ": pinned game and quotient game disagree on " +
                                     canonical_key(*g) + " vs " + canonical_key(*g2));
        }
    }

    Json config{{"samples", samples}, {"jobs", opts.jobs}, {"full", opts.full}};
    Json data{{"seed", 771231}, {"drawn", drawn}};
    return finish("wr", std::move(config), std::move(data), std::move(violations), timer);
}

SuiteResult suite_radius(const SuiteOptions& opts) {
    Timer timer;
    const int n_max = opts.full ? 7 : 5;
    std::vector<std::string> violations;
    Json per_k = Json::array();
    for (int k = 1; k <= 3; ++k) {
        const int bound = (1 << (k - 1)) - 1;
        const std::vector<Graph> members = enum_conn_tdk(k, n_max, one_color());
        for (const Graph& g : members) {
            const auto r = radius(g);
            if (!r)
                violations.push_back("k=" + std::to_string(k) +
                                     ": member not connected: " + canonical_key(g));
            else if (*r > bound)
                violations.push_back("k=" + std::to_string(k) + ": radius " +
                                     std::to_string(*r) + " exceeds " + std::to_string(bound) +
                                     ": " + canonical_key(g));
        }
        per_k.push_back({{"k", k}, {"members", members.size()}, {"radius_bound", bound}});
    }
    Json config{{"n_max", n_max}, {"jobs", opts.jobs}, {"full", opts.full}};
    return finish("radius", std::move(config), Json{{"per_k", std::move(per_k)}},
                  std::move(violations), timer);
}

SuiteResult suite_counterexample(const SuiteOptions& opts) {
    Timer timer;
    const int m_max = opts.full ? 3 : 2;
    std::vector<std::string> violations;
    Json per_m = Json::array();
    for (int m = 1; m <= m_max; ++m) {
        const StarPair pair = build_star_pair(m);
        const StarPairVerification v = verify_star_pair(pair);
        if (!v.family_hom_equal)
            violations.push_back("m=" + std::to_string(m) + ": family counts differ at " +
                                 v.family_witness.value_or("?"));
        if (!v.sentence_left || v.sentence_right)
            violations.push_back("m=" + std::to_string(m) +
                                 ": two-variable sentence fails to separate");
        if (!v.fo2_game_separates)
            violations.push_back("m=" + std::to_string(m) + ": 2-round game fails to separate");
        if (v.ck2_equivalent != false)
            violations.push_back("m=" + std::to_string(m) +
                                 ": bijective game fails to separate");
        Json a = Json::array(), a2 = Json::array();
        for (const auto& x : pair.a) a.push_back(count_to_string(x));
        for (const auto& x : pair.a2) a2.push_back(count_to_string(x));
        per_m.push_back({{"m", m},
                         {"order_left", pair.g.order()},
                         {"order_right", pair.g2.order()},
                         {"a0", count_to_string(pair.a0)},
                         {"a", std::move(a)},
                         {"a2", std::move(a2)},
                         {"family_size", pair.family.size()},
                         {"ok", v.ok}});
    }
    Json config{{"m_max", m_max}, {"jobs", opts.jobs}, {"full", opts.full}};
    return finish("counterexample", std::move(config), Json{{"per_m", std::move(per_m)}},
                  std::move(violations), timer);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "main", "lovasz-decomp", "triangular", "lemma4", "wr", "radius", "counterexample"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (opts.jobs < 1) throw input_error("run_suite: jobs must be >= 1");
    if (name == "main") return suite_main(opts);
    if (name == "lovasz-decomp") return suite_lovasz(opts);
    if (name == "triangular") return suite_triangular(opts);
    if (name == "lemma4") return suite_lemma4(opts);
    if (name == "wr") return suite_wr(opts);
    if (name == "radius") return suite_radius(opts);
    if (name == "counterexample") return suite_counterexample(opts);
    throw input_error("run_suite: unknown suite '" + name + "'");
}

} // namespace tdhom
