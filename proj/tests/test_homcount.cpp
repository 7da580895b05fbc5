#include <doctest.h>

#include "graph_enum.hpp"
#include "sparsehom/homcount.hpp"
#include "sparsehom/oracle.hpp"
#include "sparsehom/rng.hpp"

using namespace sparsehom;

TEST_CASE("count_hom_mtd fixed examples") {
    Rng rng(71);
    // K2: always twice the edge count
    auto k2 = exact_mtd(make_clique(2));
    for (int trial = 0; trial < 10; ++trial) {
        Graph h = random_graph_gnp(8, 0.4, rng);
        CHECK(count_hom_mtd(make_clique(2), k2.witness, h) == 2 * h.edge_count());
    }
    // star:2 = P3 into K3
    auto p3 = exact_mtd(make_path(3));
    CHECK(count_hom_mtd(make_path(3), p3.witness, make_clique(3)) == 12);
    // C4 with its depth-4 matched tree into K3
    auto c4 = exact_mtd(make_cycle(4));
    CHECK(c4.depth == 4);
    CHECK(count_hom_mtd(make_cycle(4), c4.witness, make_clique(3)) == 18);
}

TEST_CASE("count_hom_mtd rejects an unmatched tree") {
    Graph c4 = make_cycle(4);
    EliminationTree bad;
    bad.root = 0;
    bad.parent = {-1, 0, 1, 0};  // depth-3 tree, not matched
    MatchedEliminationTree t{bad, {PathRole::Head, PathRole::Tail, PathRole::Single, PathRole::Tail}};
    CHECK_THROWS_AS((void)count_hom_mtd(c4, t, make_clique(3)), GraphError);
}

TEST_CASE("count_hom_mtd equals the oracle on random instances") {
    Rng rng(73);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 60; ++trial) {
        int pn = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph_gnp(pn, 0.55, rng);
        if (!g.is_connected()) continue;
        ++done;
        Graph h = random_graph_gnp(3 + static_cast<int>(rng.below(8)), 0.4, rng);
        auto w = exact_mtd(g);
        CHECK(count_hom_mtd(g, w.witness, h) == oracle::hom_count(g, h));
    }
    CHECK(done >= 40);
}

TEST_CASE("isolated-vertex pattern multiplies by n") {
    auto k1 = exact_mtd(Graph::from_edges(1, {}));
    Graph h = make_path(7);
    CHECK(count_hom_mtd(Graph::from_edges(1, {}), k1.witness, h) == 7);
}

TEST_CASE("circuit on K2 sums over arcs") {
    Graph k2 = make_clique(2);
    auto d = exact_mtw(k2);
    Rng rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        Graph h = random_graph_gnp(9, 0.35, rng);
        auto c = build_hom_circuit(k2, d.witness, h);
        CHECK(evaluate_circuit(c, CountingRing{}) == 2 * h.edge_count());
    }
}

TEST_CASE("circuit equals oracle for P4 with edge bags") {
    Graph p4 = make_path(4);
    MatchedTreeDecomposition d;
    d.td.bags = {{0, 1}, {1, 2}, {2, 3}};
    d.td.tree_edges = {{0, 1}, {1, 2}};
    d.matchings = {{{0, 1}}, {{1, 2}}, {{2, 3}}};
    REQUIRE(verify_matched_td(p4, d));
    CHECK(count_hom_mtw(p4, d, make_path(4)) == 16);
    CHECK(count_hom_mtw(p4, d, make_clique(3)) == oracle::hom_count(p4, make_clique(3)));
}

TEST_CASE("count_hom_mtw equals oracle and count_hom_mtd on random instances") {
    Rng rng(83);
    int done = 0;
    for (int trial = 0; trial < 300 && done < 50; ++trial) {
        int pn = 2 + static_cast<int>(rng.below(4));
        Graph g = random_graph_gnp(pn, 0.6, rng);
        if (!g.is_connected()) continue;
        ++done;
        Graph h = random_graph_gnp(3 + static_cast<int>(rng.below(8)), 0.45, rng);
        auto mtw = exact_mtw(g);
        auto mtd = exact_mtd(g);
        Count via_circuit = count_hom_mtw(g, mtw.witness, h);
        Count via_mtd = count_hom_mtd(g, mtd.witness, h);
        Count via_oracle = oracle::hom_count(g, h);
        CHECK(via_circuit == via_oracle);
        CHECK(via_mtd == via_oracle);
    }
    CHECK(done >= 35);
}

TEST_CASE("C5 into C5 via its width-3 decomposition") {
    Graph c5 = make_cycle(5);
    auto d = exact_mtw(c5);
    CHECK(d.width == 3);
    CHECK(count_hom_mtw(c5, d.witness, c5) == 10);
}

TEST_CASE("constrained circuits count exactly the surviving homomorphisms") {
    Rng rng(89);
    Graph c4 = make_cycle(4);
    auto d = exact_mtw(c4);
    // anchored constraints: both vertices must share a bag; 0 and 1 always do
    ConstraintSet cs{SymmetryConstraint::less(0, 1)};
    for (int trial = 0; trial < 12; ++trial) {
        Graph h = random_graph_gnp(7, 0.5, rng);
        auto c = build_hom_circuit(c4, d.witness, h, cs);
        CHECK(evaluate_circuit(c, CountingRing{}) == oracle::hom_count(c4, h, cs));
    }
}

TEST_CASE("constraints referencing vertices never co-resident are rejected") {
    // P6 with edge bags: vertices 0 and 5 share no bag
    Graph p6 = make_path(6);
    MatchedTreeDecomposition d;
    d.td.bags = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    d.td.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    d.matchings = {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 4}}, {{4, 5}}};
    REQUIRE(verify_matched_td(p6, d));
    CHECK_THROWS_AS(
        (void)build_hom_circuit(p6, d, make_clique(3), {SymmetryConstraint::less(0, 5)}),
        GraphError);
}

TEST_CASE("circuit evaluation is monotone: zero valuation gives zero") {
    struct ZeroRing {
        using Value = Count;
        Value zero() const { return 0; }
        Value one() const { return 1; }
        Value add(const Value &a, const Value &b) const { return a + b; }
        Value mul(const Value &a, const Value &b) const { return a * b; }
        Value y(Vertex) const { return 0; }
    };
    Graph c4 = make_cycle(4);
    auto d = exact_mtw(c4);
    auto c = build_hom_circuit(c4, d.witness, make_clique(4));
    CHECK(evaluate_circuit(c, ZeroRing{}) == 0);
}

TEST_CASE("circuit gate count scales with the host, exponent within bounds") {
    // doubling m on random hosts; fitted exponent <= ceil((t+1)/2) + 0.3
    Rng rng(97);
    for (const char *name : {"path:4", "cycle:4", "cycle:5"}) {
        Graph g = make_pattern(name);
        auto d = exact_mtw(g);
        int expo = (d.width + 2) / 2;
        std::vector<double> sizes;
        for (int m : {60, 120, 240}) {
            Graph h = random_graph_gnm(m / 3, m, rng);
            auto c = build_hom_circuit(g, d.witness, h);
            sizes.push_back(static_cast<double>(c.term_count() + c.gate_count()));
        }
        double fitted = std::log2(sizes[2] / sizes[0]) / 2.0;
        CHECK(fitted <= expo + 0.3);
    }
}
