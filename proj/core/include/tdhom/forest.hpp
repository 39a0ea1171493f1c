#pragma once

#include <map>
#include <vector>

#include "tdhom/errors.hpp"

namespace tdhom {

// Rooted forest given by a parent map. The vertex set is exactly the key
// set of the map; roots map to kNoParent. The induced partial order puts
// ancestors below their descendants (root = minimum of its tree).
class RootedForest {
  public:
    static constexpr int kNoParent = -1;

    RootedForest() = default;
    // entries: vertex -> parent (kNoParent for roots). Throws input_error on
    // unknown parents, self-parenting, or cycles.
    explicit RootedForest(std::map<int, int> entries);

    std::size_t size() const { return parent_.size(); }
    bool contains(int v) const { return parent_.count(v) > 0; }
    const std::map<int, int>& parents() const { return parent_; }
    int parent(int v) const; // kNoParent for roots
    std::vector<int> vertices() const;
    std::vector<int> roots() const;
    bool is_tree() const { return roots().size() == 1; }
    int root() const; // input_error unless exactly one root

    // Strict ancestors of v, nearest first (parent, grandparent, ..., root).
    std::vector<int> ancestors(int v) const;
    // a == v or a a strict ancestor of v.
    bool is_ancestor(int a, int v) const;
    bool comparable(int u, int v) const;

    // Number of vertices on the longest root-to-leaf path; a single vertex
    // has height 1. Throws input_error when empty.
    int height() const;
    int depth_of(int v) const; // root has depth 1

    bool operator==(const RootedForest& other) const = default;

  private:
    std::map<int, int> parent_;
};

// Restriction of the forest order to `subset`: each kept vertex's parent
// becomes its nearest strict ancestor inside the subset. For use as a tree,
// the restriction must have a unique minimal element; `require_tree`
// enforces that (not_a_subtree_error otherwise).
RootedForest induced_forest(const RootedForest& t, const std::vector<int>& subset,
                            bool require_tree);

} // namespace tdhom
