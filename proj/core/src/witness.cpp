#include "tdhom/witness.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <thread>
#include <utility>

#include "tdhom/enumerate.hpp"
#include "tdhom/errors.hpp"
#include "tdhom/games.hpp"
#include "tdhom/restricted.hpp"

namespace tdhom {

namespace {

HomCount ipow(const HomCount& base, int e) {
    if (e < 0) throw internal_error("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

} // namespace

std::vector<int> exponent_vector(const std::vector<std::vector<HomCount>>& rows) {
    const std::size_t l = rows.size();
    if (l == 0) throw input_error("exponent_vector: no rows");
    const std::size_t m = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != m) throw input_error("exponent_vector: ragged rows");
        for (const auto& x : row)
            if (x < 1) throw input_error("exponent_vector: entries must be positive");
    }
    {
        std::set<std::vector<HomCount>> seen(rows.begin(), rows.end());
        if (seen.size() != l) throw input_error("exponent_vector: rows must be distinct");
    }
    if (m == 0) return {};

    // Exponents for the first m-1 columns, from the distinct prefixes.
    std::vector<int> d;
    std::map<std::vector<HomCount>, HomCount> prefix_product;
    if (m == 1) {
        prefix_product[{}] = 1;
    } else {
        std::set<std::vector<HomCount>> prefix_set;
        for (const auto& row : rows)
            prefix_set.insert(std::vector<HomCount>(row.begin(), row.end() - 1));
        std::vector<std::vector<HomCount>> prefixes(prefix_set.begin(), prefix_set.end());
        d = exponent_vector(prefixes);
        for (const auto& p : prefixes) {
            HomCount prod = 1;
            for (std::size_t j = 0; j < p.size(); ++j) prod *= ipow(p[j], d[j]);
            prefix_product[p] = prod;
        }
    }

    // Any two rows can share a product for at most one exponent of the last
    // column, so some value in 1..l*l works.
    const int limit = static_cast<int>(l * l);
    for (int e = 1; e <= limit; ++e) {
        std::set<HomCount> products;
        bool ok = true;
        for (const auto& row : rows) {
            std::vector<HomCount> prefix(row.begin(), row.end() - 1);
            HomCount prod = prefix_product.at(prefix) * ipow(row.back(), e);
            if (!products.insert(prod).second) {
                ok = false;
                break;
            }
        }
        if (ok) {
            d.push_back(e);
            return d;
        }
    }
    throw internal_error("exponent_vector: no admissible exponent within the bound");
}

namespace {

// Vertex ids of g and g2 grouped by rooted-count profile, in profile order.
struct ProfileClasses {
    std::vector<CountProfile> profiles;
    std::vector<std::vector<int>> left;
    std::vector<std::vector<int>> right;
};

ProfileClasses group_by_profile(const Graph& g, const Graph& g2,
                                const std::vector<Decomposed>& family) {
    std::map<CountProfile, std::pair<std::vector<int>, std::vector<int>>> classes;
    auto profile_of = [&](const Graph& host, int v) {
        CountProfile p;
        p.reserve(family.size());
        for (const auto& d : family)
            p.push_back(pp_hom_count(d, host, PinMap{{d.root(), v}}));
        return p;
    };
    for (int v = 0; v < g.order(); ++v) classes[profile_of(g, v)].first.push_back(v);
    for (int v = 0; v < g2.order(); ++v) classes[profile_of(g2, v)].second.push_back(v);

    ProfileClasses out;
    for (auto& [profile, members] : classes) {
        out.profiles.push_back(profile);
        out.left.push_back(std::move(members.first));
        out.right.push_back(std::move(members.second));
    }
    return out;
}

std::set<std::size_t> support(const CountProfile& p) {
    std::set<std::size_t> s;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (p[j] > 0) s.insert(j);
    return s;
}

// A separating pattern for an unbalanced class system: either a single
// family member with unequal totals, or a root-identified sum of the
// members supporting an unbalanced class, with multiplicities from the
// exponent-vector construction scaled by 1..l (a power-sum system over
// distinct positive bases cannot vanish everywhere).
ProfileMismatch find_mismatch(const Graph& g, const Graph& g2,
                              const std::vector<Decomposed>& family,
                              const ProfileClasses& classes) {
    std::size_t first_bad = classes.profiles.size();
    for (std::size_t i = 0; i < classes.profiles.size(); ++i) {
        if (classes.left[i].size() != classes.right[i].size()) {
            first_bad = i;
            break;
        }
    }
    if (first_bad == classes.profiles.size())
        throw internal_error("find_mismatch: classes are balanced");

    ProfileMismatch mm;
    mm.profile = classes.profiles[first_bad];
    mm.left_size = classes.left[first_bad].size();
    mm.right_size = classes.right[first_bad].size();

    for (const auto& d : family) {
        HomCount l = pp_hom_count(d, g);
        HomCount r = pp_hom_count(d, g2);
        if (l != r) {
            mm.separating = d;
            mm.left_total = std::move(l);
            mm.right_total = std::move(r);
            return mm;
        }
    }

    // Every single member agrees; build a separating sum. Use an unbalanced
    // class whose support is inclusion-maximal among unbalanced classes:
    // classes supported elsewhere contribute zero or cancel.
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < classes.profiles.size(); ++i)
        if (classes.left[i].size() != classes.right[i].size()) bad.push_back(i);

    std::optional<std::size_t> pick;
    std::set<std::size_t> s_pick;
    for (std::size_t i : bad) {
        auto s = support(classes.profiles[i]);
        if (s.empty()) continue;
        bool maximal = true;
        for (std::size_t i2 : bad) {
            if (i2 == i) continue;
            auto s2 = support(classes.profiles[i2]);
            if (s2 != s && std::includes(s2.begin(), s2.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            pick = i;
            s_pick = std::move(s);
            break;
        }
    }
    if (!pick)
        throw internal_error("find_mismatch: no unbalanced class with usable support");

    mm.profile = classes.profiles[*pick];
    mm.left_size = classes.left[*pick].size();
    mm.right_size = classes.right[*pick].size();

    const std::vector<std::size_t> cols(s_pick.begin(), s_pick.end());
    std::vector<std::vector<HomCount>> rows;
    for (std::size_t i : bad) {
        if (support(classes.profiles[i]) != s_pick) continue;
        std::vector<HomCount> row;
        row.reserve(cols.size());
        for (std::size_t j : cols) row.push_back(classes.profiles[i][j]);
        rows.push_back(std::move(row));
    }
    const std::vector<int> exps = exponent_vector(rows);

    for (std::size_t mul = 1; mul <= rows.size(); ++mul) {
        std::vector<RootedSummand> parts;
        for (std::size_t t = 0; t < cols.size(); ++t)
            parts.push_back({family[cols[t]], static_cast<int>(mul) * exps[t]});
        Decomposed sum = rooted_sum(parts).sum;
        HomCount l = pp_hom_count(sum, g);
        HomCount r = pp_hom_count(sum, g2);
        if (l != r) {
            mm.separating = std::move(sum);
            mm.left_total = std::move(l);
            mm.right_total = std::move(r);
            return mm;
        }
    }
    throw internal_error("find_mismatch: scaled sums failed to separate");
}

} // namespace

MatchingResult matching_bijection(const Graph& g, const Graph& g2,
                                  const std::vector<Decomposed>& family) {
    if (!(g.palette() == g2.palette()))
        throw input_error("matching_bijection: palettes differ");
    if (g.order() != g2.order())
        throw input_error("matching_bijection: orders differ");
    for (const auto& d : family)
        if (!(d.graph().palette() == g.palette()))
            throw input_error("matching_bijection: family palette differs");

    const ProfileClasses classes = group_by_profile(g, g2, family);
    bool balanced = true;
    for (std::size_t i = 0; i < classes.profiles.size(); ++i)
        if (classes.left[i].size() != classes.right[i].size()) balanced = false;

    MatchingResult result;
    if (balanced) {
        result.matched = true;
        result.bijection.assign(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < classes.profiles.size(); ++i)
            for (std::size_t t = 0; t < classes.left[i].size(); ++t)
                result.bijection[static_cast<std::size_t>(classes.left[i][t])] =
                    classes.right[i][t];
        return result;
    }
    result.matched = false;
    result.mismatch = find_mismatch(g, g2, family, classes);
    return result;
}

DistinguishResult distinguishing_pattern(const Graph& g, const Graph& g2, int k,
                                         int size_budget) {
    if (!(g.palette() == g2.palette()))
        throw input_error("distinguishing_pattern: palettes differ");
    DistinguishResult out;
    for (const Decomposed& d : tdk_pattern_family(k, size_budget, g.palette())) {
        HomCount l = hom_count_td(d, g);
        HomCount r = hom_count_td(d, g2);
        if (l != r) {
            out.pattern = d.graph();
            out.left_count = std::move(l);
            out.right_count = std::move(r);
            return out;
        }
    }
    out.exhausted = true;
    return out;
}

namespace {

struct SurveyShard {
    int pairs_tested = 0;
    int equivalent_pairs = 0;
    int distinguished_pairs = 0;
    int budget_exhausted = 0;
    int order_mismatch_pairs = 0;
    std::vector<std::pair<std::size_t, SurveyViolation>> violations;
};

} // namespace

EquivalenceSurvey equivalence_survey(int n_max, int k, const ColorPalette& palette,
                                     int size_budget, int jobs) {
    if (jobs < 1) throw input_error("equivalence_survey: jobs must be >= 1");
    const std::vector<Graph> graphs = enum_graphs(n_max, palette);
    const std::vector<Decomposed> patterns = tdk_pattern_family(k, size_budget, palette);

    std::vector<std::vector<HomCount>> vecs(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        vecs[i].reserve(patterns.size());
        for (const auto& d : patterns) vecs[i].push_back(hom_count_td(d, graphs[i]));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) pairs.emplace_back(i, j);

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
    std::vector<SurveyShard> shards(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto run_shard = [&](int w) {
        SurveyShard& shard = shards[static_cast<std::size_t>(w)];
        for (std::size_t p = static_cast<std::size_t>(w); p < pairs.size();
             p += static_cast<std::size_t>(workers)) {
            const auto [i, j] = pairs[p];
            const Graph& a = graphs[i];
            const Graph& b = graphs[j];
            ++shard.pairs_tested;
            auto report = [&](std::string what) {
                shard.violations.emplace_back(
                    p, SurveyViolation{canonical_key(a), canonical_key(b), std::move(what)});
            };

            if (a.order() != b.order()) {
                ++shard.order_mismatch_pairs;
                bool color_counts_differ = false;
                const int num_colors = static_cast<int>(palette.size());
                for (int c = 0; c < num_colors && !color_counts_differ; ++c) {
                    int ca = 0, cb = 0;
                    for (int v = 0; v < a.order(); ++v) ca += a.color(v) == c ? 1 : 0;
                    for (int v = 0; v < b.order(); ++v) cb += b.color(v) == c ? 1 : 0;
                    color_counts_differ = ca != cb;
                }
                if (!color_counts_differ)
                    report("orders differ yet all single-vertex counts agree");
                continue;
            }

            const bool game_equal = ck_equivalent(a, b, k);
            std::optional<std::size_t> witness;
            for (std::size_t t = 0; t < patterns.size(); ++t) {
                if (vecs[i][t] != vecs[j][t]) {
                    witness = t;
                    break;
                }
            }

            if (game_equal && witness) {
                report("game-equivalent pair separated by pattern " +
                       canonical_key(patterns[*witness].graph()));
            } else if (game_equal) {
                ++shard.equivalent_pairs;
            } else if (!witness) {
                ++shard.budget_exhausted;
            } else {
                ++shard.distinguished_pairs;
                const Graph& f = patterns[*witness].graph();
                if (hom_count(f, a) != vecs[i][*witness] ||
                    hom_count(f, b) != vecs[j][*witness])
                    report("reference recount disagrees on pattern " + canonical_key(f));
            }
        }
    };

    if (workers == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    run_shard(w);
                } catch (...) {
                    failures[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (const auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    EquivalenceSurvey out;
    std::vector<std::pair<std::size_t, SurveyViolation>> all;
    for (const auto& shard : shards) {
        out.pairs_tested += shard.pairs_tested;
        out.equivalent_pairs += shard.equivalent_pairs;
        out.distinguished_pairs += shard.distinguished_pairs;
        out.budget_exhausted += shard.budget_exhausted;
        out.order_mismatch_pairs += shard.order_mismatch_pairs;
        all.insert(all.end(), shard.violations.begin(), shard.violations.end());
    }
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [idx, v] : all) out.violations.push_back(std::move(v));
    return out;
}

} // namespace tdhom
