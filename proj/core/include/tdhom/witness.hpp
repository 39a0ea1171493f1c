#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdhom/decomposed.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/ints.hpp"

namespace tdhom {

// Given an l x m matrix of positive integers with pairwise distinct rows,
// produce exponents d (1 <= d_j <= l*l) such that the per-row products
// prod_j rows[i][j]^d[j] are pairwise distinct. Deterministic.
std::vector<int> exponent_vector(const std::vector<std::vector<HomCount>>& rows);

// Per-vertex profile: rooted adjacency-reflecting counts against a fixed
// family of decomposed patterns (pattern root pinned to the vertex).
using CountProfile = std::vector<HomCount>;

struct ProfileMismatch {
    CountProfile profile;       // the unbalanced class
    std::size_t left_size = 0;  // class members in g
    std::size_t right_size = 0; // class members in g2
    Decomposed separating;      // unrooted counts differ on this pattern
    HomCount left_total;
    HomCount right_total;
};

struct MatchingResult {
    bool matched = false;
    std::vector<int> bijection; // left id -> right id (when matched)
    std::optional<ProfileMismatch> mismatch;
};

// Group the vertices of g and g2 by profile. Balanced classes yield a
// profile-preserving bijection; an unbalanced class yields a mismatch
// report naming a separating pattern (a family member when one has unequal
// totals, otherwise a root-identified sum of family members found by the
// exponent-vector construction).
MatchingResult matching_bijection(const Graph& g, const Graph& g2,
                                  const std::vector<Decomposed>& family);

struct DistinguishResult {
    std::optional<Graph> pattern; // first separating connected pattern
    HomCount left_count;
    HomCount right_count;
    bool exhausted = false; // searched the whole bounded family, no witness
};

// First connected pattern of tree depth <= k (size-then-key order, at most
// size_budget vertices) with different hom counts into g and g2. An empty
// result is inconclusive, never a proof of equivalence.
DistinguishResult distinguishing_pattern(const Graph& g, const Graph& g2, int k,
                                         int size_budget);

struct SurveyViolation {
    CanonicalKey left;
    CanonicalKey right;
    std::string what;
};

struct EquivalenceSurvey {
    int pairs_tested = 0;
    int equivalent_pairs = 0;
    int distinguished_pairs = 0;
    int budget_exhausted = 0;     // game says inequivalent, no witness in budget
    int order_mismatch_pairs = 0;
    std::vector<SurveyViolation> violations;
};

// Cross-check the game verdict against hom counting over every unordered
// pair of graph classes with at most n_max vertices: game-equivalent pairs
// must admit no distinguishing pattern, and found patterns must reproduce
// under the exhaustive reference counter. jobs > 1 shards the pair grid
// over threads; the merged report is deterministic.
EquivalenceSurvey equivalence_survey(int n_max, int k, const ColorPalette& palette,
                                     int size_budget, int jobs = 1);

} // namespace tdhom
