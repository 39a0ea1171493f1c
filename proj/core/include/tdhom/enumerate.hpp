#pragma once

#include <vector>

#include "tdhom/canonical.hpp"
#include "tdhom/decomposed.hpp"
#include "tdhom/forest.hpp"
#include "tdhom/graph.hpp"

namespace tdhom {

// All enumerations are duplicate-free, deterministic, and ordered by vertex
// count then canonical key; representatives are canonical forms. n_max is
// capped by the canonicalization bound.

// Every graph class over the palette with 0..n_max vertices (the empty
// graph included).
std::vector<Graph> enum_graphs(int n_max, const ColorPalette& palette);

// Connected graph classes of tree depth at most k with 1..n_max vertices.
std::vector<Graph> enum_conn_tdk(int k, int n_max, const ColorPalette& palette);

// All labeled spanning single-root elimination trees of g with height at
// most k (labeled objects: no isomorphism folding), in a fixed
// deterministic order grouped by root.
std::vector<RootedForest> enum_elim_trees(const Graph& g, int k);

// Decomposed classes (graph-plus-tree pairs) of height at most k with
// 1..n_max vertices.
std::vector<Decomposed> enum_decomposed(int k, int n_max, const ColorPalette& palette);

// All labeled supergraphs of d's graph on the same vertex set whose extra
// edges join tree-comparable vertices (so d's tree stays an elimination
// tree). Ordered by edge count, then edge list. Includes d itself first.
std::vector<Decomposed> enum_supergraphs_respecting(const Decomposed& d);

} // namespace tdhom
