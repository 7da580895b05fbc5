#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sparsehom/constraints.hpp"
#include "sparsehom/graph.hpp"

namespace sparsehom {

using Count = boost::multiprecision::cpp_int;

/// Brute-force reference implementations. Deliberately plain backtracking;
/// every fast path in the library is tested against these.
namespace oracle {

/// Number of homomorphisms g -> h, optionally restricted to maps satisfying
/// all constraints. Guards: |V(g)| <= 8, |V(h)| <= 14.
Count hom_count(const Graph &g, const Graph &h, const ConstraintSet &filter = {});

Count injective_hom_count(const Graph &g, const Graph &h, const ConstraintSet &filter = {});

/// Number of subgraphs of h isomorphic to g.
Count sub_count(const Graph &g, const Graph &h);

bool induced_exists(const Graph &g, const Graph &h);

/// Number of induced subgraphs of h isomorphic to g.
Count induced_count(const Graph &g, const Graph &h);

}  // namespace oracle
}  // namespace sparsehom
