#pragma once

#include <string>
#include <vector>

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"

namespace tdhom {

// Total order on isomorphism classes: equal keys <=> isomorphic (for
// decomposed graphs: isomorphic as graph-plus-tree pairs). Keys embed the
// palette, so graphs over different palettes never collide.
using CanonicalKey = std::string;

// Brute-force canonicalization is exponential in the worst case; inputs
// larger than the bound are refused (capacity_error).
inline constexpr int kCanonicalBound = 8;

struct CanonicalGraph {
    CanonicalKey key;
    Graph form;                // relabeled representative (key-minimal)
    std::vector<int> vertex_order;  // vertex_order[new_id] = old id
};

struct CanonicalDecomposed {
    CanonicalKey key;
    Decomposed form;
    std::vector<int> vertex_order;
};

CanonicalGraph canonicalize(const Graph& g, int bound = kCanonicalBound);
CanonicalDecomposed canonicalize(const Decomposed& d, int bound = kCanonicalBound);

CanonicalKey canonical_key(const Graph& g, int bound = kCanonicalBound);
CanonicalKey canonical_key(const Decomposed& d, int bound = kCanonicalBound);

} // namespace tdhom
