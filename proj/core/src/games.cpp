#include "tdhom/games.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "tdhom/errors.hpp"

namespace tdhom {

namespace {

std::vector<int> decode(std::size_t idx, int len, int n) {
    std::vector<int> t(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(n));
        idx /= static_cast<std::size_t>(n);
    }
    return t;
}

std::string atom_fingerprint(const Graph& g, const std::vector<int>& t) {
    std::string fp;
    fp.reserve(t.size() * t.size());
    for (int v : t) fp.push_back(static_cast<char>('a' + g.color(v)));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            fp.push_back(t[i] == t[j] ? '=' : '!');
            fp.push_back(g.has_edge(t[i], t[j]) ? 'E' : '-');
        }
    return fp;
}

std::size_t power_checked(int n, int len) {
    double p = std::pow(static_cast<double>(n), static_cast<double>(len));
    if (p > 2e7) throw capacity_error("tuple grid too large");
    std::size_t out = 1;
    for (int i = 0; i < len; ++i) out *= static_cast<std::size_t>(n);
    return out;
}

// Deterministic dense ids for a set of fingerprints: rank in sorted order.
template <typename FP>
int relabel(std::vector<FP>& left, std::vector<FP>& right, std::vector<int>& left_out,
            std::vector<int>& right_out) {
    std::vector<FP> all;
    all.reserve(left.size() + right.size());
    all.insert(all.end(), left.begin(), left.end());
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto rank = [&](const FP& f) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), f) - all.begin());
    };
    left_out.resize(left.size());
    right_out.resize(right.size());
    for (std::size_t i = 0; i < left.size(); ++i) left_out[i] = rank(left[i]);
    for (std::size_t i = 0; i < right.size(); ++i) right_out[i] = rank(right[i]);
    return static_cast<int>(all.size());
}

} // namespace

std::vector<TuplePartition> ck_partitions(const Graph& g, const Graph& g2, int depth) {
    if (g.palette() != g2.palette()) throw input_error("palettes differ");
    if (g.order() != g2.order()) throw input_error("ck_partitions needs equal orders");
    if (depth < 1) throw input_error("partition depth must be at least 1");
    const int n = g.order();

    std::vector<TuplePartition> out;
    {
        // Round 0: atomic types of depth-tuples.
        TuplePartition p;
        p.tuple_length = depth;
        const std::size_t total = power_checked(n, depth);
        std::vector<std::string> lf(total), rf(total);
        for (std::size_t i = 0; i < total; ++i) {
            auto t = decode(i, depth, n);
            lf[i] = atom_fingerprint(g, t);
            rf[i] = atom_fingerprint(g2, t);
        }
        p.num_classes = relabel(lf, rf, p.left_classes, p.right_classes);
        out.push_back(std::move(p));
    }
    for (int round = 1; round <= depth; ++round) {
        const TuplePartition& prev = out.back();
        TuplePartition p;
        p.tuple_length = depth - round;
        const std::size_t total = power_checked(n, p.tuple_length);
        // Fingerprint: multiset of previous-round classes over the n
        // one-vertex extensions. Same multiset <=> a class-respecting
        // bijection between the extension sets exists.
        using FP = std::vector<std::pair<int, int>>;
        std::vector<FP> lf(total), rf(total);
        auto extend_counts = [&](const std::vector<int>& classes, std::size_t base) {
            std::map<int, int> cnt;
            for (int x = 0; x < n; ++x)
                cnt[classes[base * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)]]++;
            return FP(cnt.begin(), cnt.end());
        };
        for (std::size_t i = 0; i < total; ++i) {
            lf[i] = extend_counts(prev.left_classes, i);
            rf[i] = extend_counts(prev.right_classes, i);
        }
        p.num_classes = relabel(lf, rf, p.left_classes, p.right_classes);
        out.push_back(std::move(p));
    }
    return out;
}

bool ck_equivalent(const Graph& g, const Graph& g2, int k, const std::vector<int>& init,
                   const std::vector<int>& init2) {
    if (g.palette() != g2.palette()) throw input_error("palettes differ");
    if (k < 1) throw input_error("the bijective game needs at least one round");
    if (init.size() != init2.size()) throw input_error("init tuples differ in length");
    for (int v : init)
        if (v < 0 || v >= g.order()) throw input_error("init vertex out of range");
    for (int v : init2)
        if (v < 0 || v >= g2.order()) throw input_error("init vertex out of range");
    if (g.order() != g2.order()) return false;

    const int n = g.order();
    const int depth = k + static_cast<int>(init.size());
    auto ladder = ck_partitions(g, g2, depth);
    const TuplePartition& p = ladder[static_cast<std::size_t>(k)];
    std::size_t li = 0, ri = 0;
    for (int v : init) li = li * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    for (int v : init2) ri = ri * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    return p.left_classes[li] == p.right_classes[ri];
}

bool ck_equivalent(const Graph& g, const Graph& g2, int k) {
    return ck_equivalent(g, g2, k, {}, {});
}

namespace {

bool fo_rec(const Graph& g, const Graph& g2, std::vector<int>& vs, std::vector<int>& vs2,
            int rounds) {
    if (!is_local_isomorphism(g, g2, vs, vs2)) return false;
    if (rounds == 0) return true;
    for (int side = 0; side < 2; ++side) {
        const Graph& from = side == 0 ? g : g2;
        const Graph& to = side == 0 ? g2 : g;
        for (int x = 0; x < from.order(); ++x) {
            bool answered = false;
            for (int y = 0; y < to.order() && !answered; ++y) {
                if (from.color(x) != to.color(y)) continue;
                vs.push_back(side == 0 ? x : y);
                vs2.push_back(side == 0 ? y : x);
                answered = fo_rec(g, g2, vs, vs2, rounds - 1);
                vs.pop_back();
                vs2.pop_back();
            }
            if (!answered) return false;
        }
    }
    return true;
}

} // namespace

bool fo_equivalent(const Graph& g, const Graph& g2, int k) {
    if (g.palette() != g2.palette()) throw input_error("palettes differ");
    if (k < 0) throw input_error("rounds must be nonnegative");
    std::vector<int> vs, vs2;
    return fo_rec(g, g2, vs, vs2, k);
}

} // namespace tdhom
