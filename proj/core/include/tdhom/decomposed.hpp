#pragma once

#include <utility>
#include <vector>

#include "tdhom/forest.hpp"
#include "tdhom/graph.hpp"

namespace tdhom {

// True iff t's vertex set is exactly 0..n-1 of g and every edge of g joins
// two vertices comparable in t. `single_root` additionally demands a tree.
// Vertex-set mismatch is an input error, not "false".
bool is_elimination_forest(const Graph& g, const RootedForest& t, bool single_root);

// A graph together with a spanning single-root elimination tree. The graph
// itself may be disconnected; only the tree must be connected as an order.
class Decomposed {
  public:
    Decomposed() = default;
    // Validates: t spans exactly V(g), has one root, and every edge of g is
    // comparable in t.
    Decomposed(Graph g, RootedForest t);

    const Graph& graph() const { return graph_; }
    const RootedForest& tree() const { return tree_; }
    int order() const { return graph_.order(); }
    int root() const { return tree_.root(); }
    int height() const { return tree_.height(); }

    bool operator==(const Decomposed& other) const = default;

  private:
    Graph graph_;
    RootedForest tree_;
};

// One summand of a root-identified sum, taken `multiplicity` times.
struct RootedSummand {
    Decomposed part;
    int multiplicity = 1;
};

struct RootedSumResult {
    Decomposed sum;
    // For every expanded copy (multiplicities unrolled, in order), the map
    // from the summand's vertex ids to ids of `sum`.
    std::vector<std::vector<int>> copy_maps;
};

// Identify the roots of all copies (they must share one color and one
// palette). The identified root gets id 0; each copy's non-root vertices
// follow in ascending original order.
RootedSumResult rooted_sum(const std::vector<RootedSummand>& spec);

// Some spanning single-root elimination tree for g (not necessarily of
// minimum height): per-component optimal trees, with the extra roots
// re-parented under the first component's root.
Decomposed make_decomposed(const Graph& g);

} // namespace tdhom
