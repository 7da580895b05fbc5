#pragma once

#include <cstddef>
#include <vector>

#include "sparsehom/constraints.hpp"
#include "sparsehom/decomp.hpp"
#include "sparsehom/graph.hpp"
#include "sparsehom/oracle.hpp"

namespace sparsehom {

/// Exact |Hom(g, h)| over a matched elimination tree: the recursion
/// processes a head and its tails together by iterating host arcs grouped
/// by source, so auxiliary memory stays independent of the host size.
Count count_hom_mtd(const Graph &g, const MatchedEliminationTree &t, const Graph &h);

/// Monotone sum/product DAG whose monomials (with edge variables fixed to 1)
/// are in bijection with the homomorphisms g -> h surviving the constraint
/// set. Terms are grouped by their child-gate tuple so evaluation multiplies
/// each expensive gate product once.
struct HomCircuit {
    struct TermGroup {
        std::vector<int> gates;                     // child gate ids
        std::vector<std::vector<Vertex>> monomials;  // host-vertex variables each term
    };
    struct Gate {
        std::vector<TermGroup> groups;
    };

    std::vector<Gate> gates;  // topologically ordered: children precede parents
    int output = -1;

    std::size_t gate_count() const { return gates.size(); }
    std::size_t term_count() const;
};

HomCircuit build_hom_circuit(const Graph &g, const MatchedTreeDecomposition &d, const Graph &h,
                             const ConstraintSet &constraints = {});

/// Ring must provide: Value, zero(), one(), add(a,b), mul(a,b), y(vertex).
template <typename Ring>
typename Ring::Value evaluate_circuit(const HomCircuit &c, const Ring &ring) {
    using Value = typename Ring::Value;
    std::vector<Value> value(c.gates.size(), ring.zero());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        Value acc = ring.zero();
        for (const auto &group : c.gates[i].groups) {
            Value msum = ring.zero();
            for (const auto &mono : group.monomials) {
                Value m = ring.one();
                for (Vertex v : mono) m = ring.mul(m, ring.y(v));
                msum = ring.add(msum, m);
            }
            for (int gid : group.gates) msum = ring.mul(msum, value[gid]);
            acc = ring.add(acc, msum);
        }
        value[i] = std::move(acc);
    }
    return value[c.output];
}

/// Integer evaluation with every vertex variable set to 1.
struct CountingRing {
    using Value = Count;
    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value add(const Value &a, const Value &b) const { return a + b; }
    Value mul(const Value &a, const Value &b) const { return a * b; }
    Value y(Vertex) const { return 1; }
};

Count count_hom_mtw(const Graph &g, const MatchedTreeDecomposition &d, const Graph &h);

}  // namespace sparsehom
