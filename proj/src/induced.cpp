#include "sparsehom/induced.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

#include "sparsehom/group_algebra.hpp"
#include "sparsehom/homcount.hpp"
#include "sparsehom/oracle.hpp"
#include "sparsehom/rng.hpp"

namespace sparsehom {

bool odd_survivor_parity(const Graph &supergraph, const ConstraintSet &constraints) {
    const int n = supergraph.vertex_count();
    auto auts = automorphisms(supergraph);
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<Vertex> image(n);
    do {
        int survivors = 0;
        for (const auto &alpha : auts) {
            for (int v = 0; v < n; ++v) image[v] = pi[alpha[v]];
            if (all_satisfied(constraints, image)) ++survivors;
        }
        if (survivors % 2 == 0) return false;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return true;
}

namespace {

// Candidate constraints anchored in the decomposition's bags.
std::vector<SymmetryConstraint> candidate_constraints(const MatchedTreeDecomposition &d) {
    std::vector<SymmetryConstraint> out;
    std::set<std::pair<Vertex, Vertex>> seen_less;
    std::set<std::pair<Vertex, std::vector<Vertex>>> seen_min;
    for (const auto &bag : d.td.bags) {
        auto sorted = bag;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex a : sorted)
            for (Vertex b : sorted)
                if (a != b && seen_less.emplace(a, b).second)
                    out.push_back(SymmetryConstraint::less(a, b));
        // min-of over every subset of the bag of size >= 2, anchored at each
        // member
        const int s = static_cast<int>(sorted.size());
        for (int mask = 1; mask < (1 << s); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<Vertex> members;
            for (int i = 0; i < s; ++i)
                if ((mask >> i) & 1) members.push_back(sorted[i]);
            for (Vertex a : members)
                if (seen_min.emplace(a, members).second)
                    out.push_back(SymmetryConstraint::min_of(a, members));
        }
    }
    return out;
}

std::optional<ConstraintSet> find_constraints(const Graph &gp,
                                              const MatchedTreeDecomposition &d) {
    if (odd_survivor_parity(gp, {})) return ConstraintSet{};
    auto cands = candidate_constraints(d);
    for (const auto &c : cands)
        if (odd_survivor_parity(gp, {c})) return ConstraintSet{c};
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (odd_survivor_parity(gp, {cands[i], cands[j]}))
                return ConstraintSet{cands[i], cands[j]};
    return std::nullopt;
}

// Deterministic stream of vertex permutations used to retry the witness
// search with differently shaped decompositions.
std::vector<int> nth_permutation(int n, std::uint64_t idx) {
    std::vector<int> pool(n), out;
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = n; i > 0; --i) {
        out.push_back(pool[idx % i]);
        pool.erase(pool.begin() + static_cast<long>(idx % i));
        idx /= i;
    }
    return out;
}

RecipeTerm solve_term(const Graph &gp, int width_budget) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= gp.vertex_count(); ++i) fact *= i;
    for (std::uint64_t attempt = 0; attempt < fact; ++attempt) {
        Graph relabeled = relabel(gp, nth_permutation(gp.vertex_count(), attempt));
        auto mtw = exact_mtw(relabeled, width_budget);
        if (!mtw)
            throw GraphError("recipe: no width-" + std::to_string(width_budget) +
                             " matched decomposition for a supergraph");
        auto cs = find_constraints(relabeled, mtw->witness);
        if (cs) return RecipeTerm{relabeled, mtw->witness, *cs};
    }
    throw GraphError("recipe: no parity-odd constraint set found for a supergraph");
}

}  // namespace

DetectionRecipe build_c6_recipe() {
    static std::mutex mu;
    static std::optional<DetectionRecipe> cached;
    std::lock_guard<std::mutex> lock(mu);
    if (cached) return *cached;

    Graph c6 = make_cycle(6);
    // 6-vertex supergraphs of C6 up to isomorphism: C6 plus chord subsets.
    std::vector<std::pair<Vertex, Vertex>> chords;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!c6.has_edge(i, j)) chords.emplace_back(i, j);

    std::set<CanonicalForm> seen;
    std::vector<Graph> odd_supergraphs;
    for (int mask = 0; mask < (1 << chords.size()); ++mask) {
        auto edges = c6.edges();
        for (std::size_t i = 0; i < chords.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(chords[i]);
        Graph gp = Graph::from_edges(6, edges);
        auto form = canonical_form(gp);
        if (!seen.insert(form).second) continue;
        if (oracle::sub_count(c6, gp) % 2 != 0) odd_supergraphs.push_back(gp);
    }

    DetectionRecipe recipe;
    recipe.pattern = c6;
    recipe.algebra_dim = 8;
    for (const auto &gp : odd_supergraphs) recipe.terms.push_back(solve_term(gp, 3));
    cached = recipe;
    return recipe;
}

DetectionRecipe build_pbar_recipe(int k) {
    if (k < 4 || k > 8) throw GraphError("pbar recipe supports 4 <= k <= 8");
    Graph pbar = make_complement_path(k);
    auto mtw = exact_mtw(pbar, k - 3);
    if (!mtw) throw GraphError("internal: complement path exceeded width k-3");
    ConstraintSet cs{SymmetryConstraint::less(0, k - 1)};
    if (!odd_survivor_parity(pbar, cs))
        throw GraphError("internal: pbar constraint parity violated");
    DetectionRecipe recipe;
    recipe.pattern = pbar;
    recipe.algebra_dim = k + 2;
    recipe.terms.push_back(RecipeTerm{pbar, mtw->witness, cs});
    return recipe;
}

bool detect_induced(const DetectionRecipe &recipe, const Graph &h, int trials,
                    std::uint64_t seed, int threads) {
    (void)threads;  // the round loop exits early; rounds stay sequential
    if (h.vertex_count() == 0) return false;
    std::vector<HomCircuit> circuits;
    circuits.reserve(recipe.terms.size());
    for (const auto &term : recipe.terms)
        circuits.push_back(build_hom_circuit(term.supergraph, term.decomp, h, term.constraints));

    const int k = recipe.algebra_dim;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < trials; ++t) {
        Gf2GroupRing ring;
        ring.k = k;
        ring.vertex_values.reserve(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); ++v)
            ring.vertex_values.push_back(GroupAlgebraElement::generator(
                k, static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << k))));
        GroupAlgebraElement sum = GroupAlgebraElement::zero(k);
        for (const auto &c : circuits) sum += evaluate_circuit(c, ring);
        if (!sum.is_zero()) return true;
    }
    return false;
}

}  // namespace sparsehom
