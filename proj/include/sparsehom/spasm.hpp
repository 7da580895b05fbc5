#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparsehom/decomp.hpp"
#include "sparsehom/graph.hpp"

namespace sparsehom {

using Rational = boost::multiprecision::cpp_rational;

/// One member of Spasm(G): a canonical quotient graph with its exact
/// rational coefficient in the subgraph-count expansion
///   Sub_G[H] = sum over terms of coefficient * Hom(quotient, H).
struct SpasmTerm {
    Graph quotient;  // stored under its canonical labeling
    CanonicalForm form;
    Rational coefficient;
    std::optional<MatchedEliminationTree> mtd_witness;
    std::optional<MatchedTreeDecomposition> mtw_witness;
};

/// Quotients of g by partitions into independent sets, with Moebius weights
/// prod (-1)^(|B|-1) (|B|-1)! accumulated per isomorphism class and divided
/// by |Aut(g)|. Zero coefficients are dropped. g connected, <= 11 vertices.
std::vector<SpasmTerm> spasm_with_coefficients(const Graph &g);

enum class AttachMode { Mtd, Mtw };

struct AttachError : GraphError {
    AttachError(const std::string &msg, std::vector<CanonicalForm> off)
        : GraphError(msg), offenders(std::move(off)) {}
    std::vector<CanonicalForm> offenders;
};

/// Finds a verified witness of depth (mtd) or width (mtw) within budget for
/// every term; throws AttachError listing the offending canonical graphs
/// otherwise.
void attach_decompositions(std::vector<SpasmTerm> &terms, AttachMode mode, int budget,
                           int threads = 1);

struct SpasmCache {
    std::map<std::string, std::vector<SpasmTerm>> entries;  // pattern name -> terms
};

void save_cache(const SpasmCache &cache, const std::string &path);
SpasmCache load_cache(const std::string &path);

}  // namespace sparsehom
