#pragma once

#include <string>
#include <vector>

#include "sparsehom/graph.hpp"
#include "sparsehom/oracle.hpp"
#include "sparsehom/spasm.hpp"

namespace sparsehom {

/// Raised when an exact-arithmetic invariant breaks (non-integral subgraph
/// count); maps to a dedicated CLI exit code.
struct ConsistencyError : GraphError {
    using GraphError::GraphError;
};

enum class PlanMode { ConstSpace, PolySpace };

/// A counting strategy: spasm terms with verified witnesses, evaluated with
/// the constant-space recursion (mtd witnesses) or circuits (mtw witnesses).
struct CountPlan {
    Graph pattern;
    PlanMode mode;
    std::vector<SpasmTerm> terms;
    int predicted_exponent = 0;  // max ceil(depth/2) resp. ceil((width+1)/2)
};

CountPlan make_plan(const Graph &pattern, PlanMode mode, int threads = 1);

/// Builds the plan from precomputed spasm terms (e.g. a loaded cache);
/// attaches missing witnesses.
CountPlan make_plan(const Graph &pattern, PlanMode mode, std::vector<SpasmTerm> terms,
                    int threads);

/// Exact subgraph count: sum of coefficient * hom count over the plan's
/// terms. The rational total must come out integral; anything else raises
/// ConsistencyError.
Count count_subgraphs(const CountPlan &plan, const Graph &h, int threads = 1);

/// Exact homomorphism count for the pattern itself (no spasm); disconnected
/// patterns multiply over components.
Count count_homs(const Graph &pattern, const Graph &h, PlanMode mode);

}  // namespace sparsehom
