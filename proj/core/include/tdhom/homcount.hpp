#pragma once

#include <map>
#include <vector>

#include "tdhom/canonical.hpp"
#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/ints.hpp"

namespace tdhom {

// Partial map pattern-vertex -> target-vertex; counted maps must extend it.
using PinMap = std::map<int, int>;

// Color- and edge-preserving maps f -> g extending pins. Exhaustive
// reference implementation: iterates all |V(g)|^|V(f)| assignments.
HomCount hom_count(const Graph& f, const Graph& g, const PinMap& pins = {});

// Injective homomorphisms (exhaustive).
HomCount emb_count(const Graph& f, const Graph& g, const PinMap& pins = {});

// Homomorphisms that are vertex-surjective and whose edge image covers
// every edge of g (exhaustive).
HomCount epi_count(const Graph& f, const Graph& g, const PinMap& pins = {});

// Same value as hom_count(d.graph(), g, pins), computed by dynamic
// programming along d's elimination tree: O(|V| * |V(g)|^height) instead of
// exponential in |V|.
HomCount hom_count_td(const Decomposed& d, const Graph& g, const PinMap& pins = {});

// Decomposed forms (minimum-height witness trees) of enum_conn_tdk's
// output, the pattern family behind hom vectors.
std::vector<Decomposed> tdk_pattern_family(int k, int size_bound, const ColorPalette& palette);

// Profile of g against the connected patterns of tree depth <= k with at
// most size_bound vertices, in enumeration order.
struct HomVector {
    int k = 0;
    int size_bound = 0;
    ColorPalette palette;
    std::vector<std::pair<CanonicalKey, HomCount>> entries;
};

HomVector hom_vector(const Graph& g, int k, int size_bound);
HomVector hom_vector(const Graph& g, int k, int size_bound,
                     const std::vector<Decomposed>& patterns);

} // namespace tdhom
