#pragma once

#include "tdhom/canonical.hpp"
#include "tdhom/forest.hpp"
#include "tdhom/graph.hpp"

namespace tdhom {

struct TreeDepthResult {
    int depth = 0;
    RootedForest witness; // spanning elimination forest of that height,
                          // one tree per connected component
};

// Minimum height of a spanning elimination forest. Values are memoized by
// canonical key behind a shared-read lock; witness construction re-derives
// the forest and tie-breaks on the smallest serialized parent array.
int tree_depth_value(const Graph& g);
TreeDepthResult tree_depth(const Graph& g);

} // namespace tdhom
