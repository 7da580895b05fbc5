#pragma once

#include <optional>
#include <vector>

#include "sparsehom/graph.hpp"

namespace sparsehom {

// ---------------------------------------------------------------------------
// Elimination trees

struct EliminationTree {
    Vertex root = -1;
    std::vector<Vertex> parent;  // parent[v]; -1 for the root

    int vertex_count() const { return static_cast<int>(parent.size()); }
    int depth() const;  // max vertices on a root-to-leaf path
    std::vector<std::vector<Vertex>> children() const;
    std::vector<std::vector<Vertex>> root_to_leaf_paths() const;
};

/// Role a vertex plays in the two-levels-at-a-time counting recursion.
/// Heads are matched downward to every child, tails close their parent's
/// pair, singles realize the odd-path pivot (their image is enumerated from
/// the host neighbors of their parent's image).
enum class PathRole : unsigned char { Head, Tail, Single };

struct MatchedEliminationTree {
    EliminationTree tree;
    std::vector<PathRole> roles;

    int depth() const { return tree.depth(); }
    /// Matching certificate for each root-to-leaf path: the covering edge
    /// set prescribed by the roles.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> path_certificates() const;
};

/// Accepts trees whose every G-edge joins an ancestor-descendant pair.
bool verify_elim_tree(const Graph &g, const EliminationTree &t);

/// verify_elim_tree plus the per-path matching condition: even paths are
/// perfectly matched by consecutive pairs, odd paths have a pivot vertex
/// covered by edges to both path neighbors.
bool verify_matched_elim_tree(const Graph &g, const EliminationTree &t);
bool verify_matched_elim_tree(const Graph &g, const MatchedEliminationTree &t);

/// Derives a consistent role assignment for a per-path-matched tree, if one
/// exists. The counting recursion executes exactly these assignments.
std::optional<std::vector<PathRole>> assign_roles(const Graph &g, const EliminationTree &t);

int exact_td(const Graph &g);
EliminationTree exact_td_witness(const Graph &g);

struct MtdResult {
    int depth;
    MatchedEliminationTree witness;
};

/// Minimum-depth matched elimination tree via memoized search over
/// (connected component, path-context) states. Connected g, <= 12 vertices.
MtdResult exact_mtd(const Graph &g);
std::optional<MtdResult> exact_mtd(const Graph &g, int depth_budget);

/// Two-phase pull-up construction: matched elimination tree of depth
/// <= 2*depth(t) - 2 from an elimination tree of depth >= 2.
MatchedEliminationTree lift_td_to_mtd(const Graph &g, const EliminationTree &t);

// ---------------------------------------------------------------------------
// Tree decompositions

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

struct MatchedTreeDecomposition {
    TreeDecomposition td;
    /// Per-bag matching certificate; covers all bag vertices or all but one,
    /// which must be adjacent to a covered vertex.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;

    int width() const { return td.width(); }
};

bool verify_td(const Graph &g, const TreeDecomposition &d);
bool verify_matched_td(const Graph &g, const MatchedTreeDecomposition &d);

/// Computes a valid matching certificate for every bag, or nullopt if some
/// bag is not matched.
std::optional<MatchedTreeDecomposition> certify_matched(const Graph &g,
                                                        const TreeDecomposition &d);

struct MtwResult {
    int width;
    MatchedTreeDecomposition witness;
};

/// Memoized interface recursion: state is the remaining component C, whose
/// interface N(C) must be contained in the next bag. Tries every matched bag
/// B with N(C) <= B <= N(C) u C of size <= width+1. Cross-checked against
/// the known small lower bounds; see the tests.
std::optional<MtwResult> exact_mtw(const Graph &g, int width_budget);
MtwResult exact_mtw(const Graph &g);

int exact_tw(const Graph &g);
std::optional<TreeDecomposition> exact_tw_witness(const Graph &g, int width_budget);

/// Top-down doubling construction: matched tree decomposition of width
/// <= 2*width(d) + 1 (<= 2*width(d) - 1 when every maximum bag spans an
/// edge).
MatchedTreeDecomposition lift_tw_to_mtw(const Graph &g, const TreeDecomposition &d);

// ---------------------------------------------------------------------------
// Structural predicates

/// Is `pattern` an induced minor of g (induced subgraph followed by edge
/// contractions)? Both graphs small; memoized delete/contract recursion.
bool is_induced_minor(const Graph &pattern, const Graph &g);

/// True iff g has no induced C4, P6 or T33.
bool forbidden_mtd3_free(const Graph &g);

bool has_induced(const Graph &pattern, const Graph &g);

}  // namespace sparsehom
