#include "tdhom/forest.hpp"

#include <algorithm>

namespace tdhom {

RootedForest::RootedForest(std::map<int, int> entries) : parent_(std::move(entries)) {
    for (const auto& [v, p] : parent_) {
        if (p == v) throw input_error("forest vertex cannot be its own parent");
        if (p != kNoParent && parent_.count(p) == 0)
            throw input_error("forest parent is not a vertex");
    }
    // Walk each vertex to a root; a walk longer than the size means a cycle.
    for (const auto& [v, p] : parent_) {
        (void)p;
        int cur = v;
        std::size_t steps = 0;
        while (parent_.at(cur) != kNoParent) {
            cur = parent_.at(cur);
            if (++steps > parent_.size()) throw input_error("parent map contains a cycle");
        }
    }
}

int RootedForest::parent(int v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) throw input_error("vertex not in forest");
    return it->second;
}

std::vector<int> RootedForest::vertices() const {
    std::vector<int> out;
    out.reserve(parent_.size());
    for (const auto& [v, p] : parent_) {
        (void)p;
        out.push_back(v);
    }
    return out;
}

std::vector<int> RootedForest::roots() const {
    std::vector<int> out;
    for (const auto& [v, p] : parent_)
        if (p == kNoParent) out.push_back(v);
    return out;
}

int RootedForest::root() const {
    auto rs = roots();
    if (rs.size() != 1) throw input_error("forest is not a single-root tree");
    return rs.front();
}

std::vector<int> RootedForest::ancestors(int v) const {
    std::vector<int> out;
    int cur = parent(v);
    while (cur != kNoParent) {
        out.push_back(cur);
        cur = parent(cur);
    }
    return out;
}

bool RootedForest::is_ancestor(int a, int v) const {
    if (!contains(a) || !contains(v)) throw input_error("vertex not in forest");
    int cur = v;
    while (cur != kNoParent) {
        if (cur == a) return true;
        cur = parent(cur);
    }
    return false;
}

bool RootedForest::comparable(int u, int v) const {
    return is_ancestor(u, v) || is_ancestor(v, u);
}

int RootedForest::depth_of(int v) const {
    return static_cast<int>(ancestors(v).size()) + 1;
}

int RootedForest::height() const {
    if (parent_.empty()) throw input_error("height of empty forest");
    int h = 0;
    for (const auto& [v, p] : parent_) {
        (void)p;
        h = std::max(h, depth_of(v));
    }
    return h;
}

RootedForest induced_forest(const RootedForest& t, const std::vector<int>& subset,
                            bool require_tree) {
    std::map<int, int> entries;
    for (int v : subset) {
        if (!t.contains(v)) throw input_error("induced_forest: vertex not in forest");
        if (entries.count(v)) throw input_error("induced_forest: duplicate vertex");
        entries[v] = RootedForest::kNoParent;
    }
    for (auto& [v, p] : entries) {
        for (int a : t.ancestors(v))
            if (entries.count(a)) {
                p = a;
                break;
            }
    }
    RootedForest out(std::move(entries));
    if (require_tree && !out.is_tree())
        throw not_a_subtree_error("restriction has no unique minimal element");
    return out;
}

} // namespace tdhom
