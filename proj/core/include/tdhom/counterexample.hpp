#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/ints.hpp"

namespace tdhom {

// Palette used by the star constructions: grey centers, white and black tips.
const ColorPalette& star_palette();

// Double star: one grey center (vertex 0) joined to p white tips (1..p) and
// q black tips (p+1..p+q). S(0, 0) is a single grey vertex.
Graph star(int p, int q);

// The center-rooted elimination tree of star(p, q) (height <= 2).
Decomposed star_decomposed(int p, int q);

// hom(star(i, j), star(p, q)) in closed form: p^i * q^j with 0^0 = 1.
HomCount star_hom(int i, int j, int p, int q);

struct FamilyMember {
    std::string name; // "S(i,j)", "W", or "B"
    Graph graph;
    Decomposed decomposed;
};

// Two graphs that agree on every pattern of radius <= 1 (stars, single
// vertices) yet differ on a first-order property with two variables: a grey
// vertex with a white neighbour and no black neighbour exists in g only.
struct StarPair {
    int m = 0;                  // moments 1..m are matched
    std::vector<HomCount> a;    // copies of star(1, q) in g, q = 1..m+1
    std::vector<HomCount> a2;   // copies of star(1, q) in g2, q = 1..m+1
    HomCount a0;                // copies of star(1, 0) in g (none in g2)
    Graph g;
    Graph g2;
    std::vector<FamilyMember> family; // S(i,j) for i <= m+1, j <= m; W; B
};

// Build the pair for a given m >= 1 by solving the (m+1)-point power-moment
// system exactly and splitting the integer solution by sign. Cheap
// structural invariants (matched moments, a0 > 0) are asserted here.
StarPair build_star_pair(int m);

// The two-variable sentence "some grey vertex has a white neighbour and no
// black neighbour".
bool check_fo2_sentence(const Graph& g);

struct StarPairVerification {
    bool family_hom_equal = false;     // engine counts agree on every member
    std::optional<std::string> family_witness;
    bool sentence_left = false;        // true in g
    bool sentence_right = false;       // false in g2
    bool fo2_game_separates = false;   // classic 2-round game tells them apart
    bool orders_match = false;
    std::optional<bool> ck2_equivalent; // bijective game verdict, orders equal only
    bool ok = false;
};

// Replays the pair's claims with the generic machinery (no closed forms):
// per-member hom counts, the sentence's truth values, the classic game, and
// (when the orders match) the bijective game.
StarPairVerification verify_star_pair(const StarPair& pair);

} // namespace tdhom
