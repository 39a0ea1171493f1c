#pragma once

// Shared elimination-tree dynamic program (build-internal header).
// Counts maps d.graph() -> g that preserve colors and edges, extend the
// pins, and satisfy the chosen constraint along every root-to-leaf chain.

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/ints.hpp"

namespace tdhom::detail {

enum class ChainMode {
    Any,        // plain homomorphisms
    Injective,  // images of comparable vertices are distinct
    Reflecting, // injective + adjacency of images iff adjacency in pattern,
                // for every comparable pair
};

HomCount elimination_dp(const Decomposed& d, const Graph& g, const PinMap& pins,
                        ChainMode mode);

} // namespace tdhom::detail
