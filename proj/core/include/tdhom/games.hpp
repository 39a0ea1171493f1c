#pragma once

#include <vector>

#include "tdhom/graph.hpp"

namespace tdhom {

// Joint partition of the tuples of two same-order graphs. Partition j (of a
// depth-d ladder) covers tuples of length d-j; two tuples fall in the same
// class iff the bijective pebble game lasting j more rounds is a win for
// the matching player from that position. Tuple indices are mixed-radix,
// first coordinate most significant.
struct TuplePartition {
    int tuple_length = 0;
    int num_classes = 0;
    std::vector<int> left_classes;
    std::vector<int> right_classes;
};

// The full ladder: partitions[0] (local-isomorphism types of depth-tuples)
// up to partitions[depth] (full-game verdicts on the empty tuple).
// Requires equal palettes and equal orders.
std::vector<TuplePartition> ck_partitions(const Graph& g, const Graph& g2, int depth);

// Win of the matching player in the k-round bijective pebble game. Returns
// false outright when the orders differ. The init tuples (default empty)
// seat the game at a prefilled position.
bool ck_equivalent(const Graph& g, const Graph& g2, int k);
bool ck_equivalent(const Graph& g, const Graph& g2, int k, const std::vector<int>& init,
                   const std::vector<int>& init2);

// Win of the matching player in the classic k-round back-and-forth game
// (no bijection requirement, so orders may differ).
bool fo_equivalent(const Graph& g, const Graph& g2, int k);

} // namespace tdhom
