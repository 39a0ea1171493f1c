#pragma once

#include <optional>
#include <vector>

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/ints.hpp"

namespace tdhom {

// Homomorphisms d.graph() -> g that are injective on every chain of d's
// tree (comparable pattern vertices get distinct images).
HomCount pi_hom_count(const Decomposed& d, const Graph& g, const PinMap& pins = {});

// Chain-injective homomorphisms that additionally reflect adjacency on
// comparable pairs: for u comparable v, uv is an edge iff the images are
// adjacent.
HomCount pp_hom_count(const Decomposed& d, const Graph& g, const PinMap& pins = {});

// A graph sitting on a subset of an ambient decomposed graph's vertices,
// with colors inherited from the ambient graph. Vertices ascending; edges
// normalized (u < v, sorted).
struct PlacedGraph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;

    auto operator<=>(const PlacedGraph&) const = default;
};

// Validates ids/edges against the ambient decomposed graph.
PlacedGraph make_placed(const Decomposed& ambient, std::vector<int> vertices,
                        std::vector<std::pair<int, int>> edges);

// Dense relabeling of a placed graph together with the induced subtree.
// ambient_ids (optional out): dense id -> ambient id.
Decomposed densify(const Decomposed& ambient, const PlacedGraph& p,
                   std::vector<int>* ambient_ids = nullptr);

// Idempotent maps h: V(d) -> V(d) with h(u) an ancestor-or-self of u, no
// edge collapsed, mapping onto exactly `target` (vertices fixed pointwise,
// edge image = target's edge set). Zero when target is not reachable.
HomCount s_epi_count(const Decomposed& d, const PlacedGraph& target);

// Convenience overload taking an external graph plus an id embedding into
// V(d); colors must match under the embedding, else the count is zero.
HomCount s_epi_count(const Decomposed& d, const Graph& g, const std::vector<int>& embed);

// All images of idempotent ancestor-shrinking no-collapse maps of d,
// ordered by size then content. The full image (d itself) is last.
std::vector<PlacedGraph> shrink_images(const Decomposed& d);

// Unique factorization of a homomorphism h: d.graph() -> target into a
// shrinking epimorphism onto an image followed by a chain-injective
// homomorphism of the image.
struct Factorization {
    PlacedGraph image;
    std::vector<int> shrink;      // per vertex of d: its image (ambient id)
    std::map<int, int> tail;      // image vertex (ambient id) -> V(target)
};

Factorization factorize_hom(const Decomposed& d, const Graph& target,
                            const std::vector<int>& hom);

struct IdentityReport {
    HomCount lhs;
    HomCount rhs;
    bool equal = false;
};

// hom(d, h) == sum over shrink images G of
//   (#shrinking epis onto G) * (chain-injective homs of G into h).
IdentityReport hom_factorization_identity_check(const Decomposed& d, const Graph& h);

// pi-hom(d, h) == sum of pp-hom((G, tree), h) over the supergraphs of d
// respecting the tree.
IdentityReport pihom_supergraph_identity_check(const Decomposed& d, const Graph& h);

// Triangular linear system recovering restricted counts from plain ones.
// Exact integer arithmetic throughout; `direct` holds independently
// computed counts and `matches` their entrywise agreement with b.
struct TriangularSystem {
    std::vector<Decomposed> family;           // dense member forms
    std::vector<std::vector<HomCount>> matrix;
    std::vector<HomCount> c;                  // given counts
    std::vector<HomCount> b;                  // solved counts
    std::vector<HomCount> direct;
    bool matches = false;
    bool lower = true;
    int base_index = -1;                      // position of the input base
};

// Family: shrink images of base with induced subtrees, sized ascending
// (base last). Matrix: pairwise shrinking-epi counts (lower triangular,
// unit diagonal). c: plain hom counts into h. Solves A b = c forward;
// b recovers the chain-injective counts.
TriangularSystem solve_pihom_from_hom(const Decomposed& base, const Graph& h);

// Family: tree-respecting supergraphs of base, edge count ascending (base
// first). Matrix: edge-subset indicators (upper triangular, unit
// diagonal). c: chain-injective counts. Solves backward; b recovers the
// adjacency-reflecting counts.
TriangularSystem solve_pphom_from_pihom(const Decomposed& base, const Graph& h);

// Agreement of three pairwise-indistinguishability verdicts between g and
// g2, each over the finite families bounded by size_bound: plain hom
// counts on connected patterns of tree depth <= k, chain-injective counts
// and adjacency-reflecting counts on decomposed patterns of height <= k.
struct CountEquivalenceReport {
    bool hom_equal = false;
    bool pihom_equal = false;
    bool pphom_equal = false;
    bool agree = false;
    std::optional<CanonicalKey> hom_witness;
    std::optional<CanonicalKey> pihom_witness;
    std::optional<CanonicalKey> pphom_witness;
};

CountEquivalenceReport count_equivalence_check(const Graph& g, const Graph& g2, int k,
                                               int size_bound);

// Same check against caller-supplied pattern families (amortizes the
// enumeration over many pairs).
CountEquivalenceReport count_equivalence_check(const Graph& g, const Graph& g2,
                                               const std::vector<Decomposed>& conn_patterns,
                                               const std::vector<Decomposed>& dec_patterns);

} // namespace tdhom
