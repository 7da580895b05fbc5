#pragma once

#include <cstdint>
#include <vector>

#include "sparsehom/constraints.hpp"
#include "sparsehom/decomp.hpp"
#include "sparsehom/graph.hpp"

namespace sparsehom {

/// One constrained homomorphism circuit of the detection pipeline: a
/// supergraph of the pattern that hosts it an odd number of times, a
/// width-bounded matched tree decomposition, and constraints that leave an
/// odd number of surviving maps per labeled occurrence.
struct RecipeTerm {
    Graph supergraph;
    MatchedTreeDecomposition decomp;
    ConstraintSet constraints;
};

struct DetectionRecipe {
    Graph pattern;
    std::vector<RecipeTerm> terms;
    int algebra_dim = 0;  // k of GF(2)[Z_2^k]; pattern size + 2
    int default_trials = 32;
};

/// For every ordering pi of the supergraph's vertices, the number of
/// automorphisms alpha with pi o alpha satisfying the constraints must be
/// odd; then the constrained circuit counts each labeled occurrence an odd
/// number of times mod 2.
bool odd_survivor_parity(const Graph &supergraph, const ConstraintSet &constraints);

/// All 6-vertex supergraphs of C6 (up to isomorphism) containing C6 an odd
/// number of times, paired with width-3 matched decompositions and
/// parity-odd constraint sets. Derived by search and validated, not
/// transcribed.
DetectionRecipe build_c6_recipe();

/// Single-term recipe for the complement of the k-vertex path, 4 <= k <= 8:
/// width-(k-3) matched decomposition plus the reflection-breaking
/// constraint sigma(first) < sigma(last).
DetectionRecipe build_pbar_recipe(int k);

/// Randomized one-sided detection: "true" is always correct, "false" may be
/// a false negative. Deterministic for fixed seed.
bool detect_induced(const DetectionRecipe &recipe, const Graph &h, int trials,
                    std::uint64_t seed, int threads = 1);

}  // namespace sparsehom
