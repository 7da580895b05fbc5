#include <doctest.h>

#include "sparsehom/oracle.hpp"
#include "sparsehom/rng.hpp"

using namespace sparsehom;

TEST_CASE("hom counts on small fixed instances") {
    CHECK(oracle::hom_count(make_clique(2), make_clique(3)) == 6);
    CHECK(oracle::hom_count(make_cycle(4), make_clique(3)) == 18);  // trace(A^4)
    CHECK(oracle::hom_count(make_cycle(3), make_clique(3)) == 6);
    CHECK(oracle::hom_count(make_path(3), make_clique(3)) == 12);   // sum of deg^2
    CHECK(oracle::hom_count(make_star(3), make_path(4)) == 18);     // sum of deg^3
    CHECK(oracle::hom_count(make_path(4), make_path(4)) == 16);     // 3-step walks
    CHECK(oracle::hom_count(make_cycle(5), make_petersen()) == 120);
}

TEST_CASE("sub counts on small fixed instances") {
    CHECK(oracle::sub_count(make_cycle(4), make_clique(4)) == 3);
    CHECK(oracle::sub_count(make_path(3), make_clique(3)) == 3);
    CHECK(oracle::sub_count(make_cycle(6), make_cycle(6)) == 1);
    CHECK(oracle::sub_count(make_cycle(6), make_clique(6)) == 60);
    CHECK(oracle::sub_count(make_path(3), make_star(5)) == 10);
}

TEST_CASE("induced existence") {
    CHECK(!oracle::induced_exists(make_cycle(6), make_clique(6)));
    Graph c6_chord = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK(!oracle::induced_exists(make_cycle(6), c6_chord));
    CHECK(!oracle::induced_exists(make_cycle(6), make_cycle(7)));
    Graph c6_plus_iso = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(oracle::induced_exists(make_cycle(6), c6_plus_iso));
    CHECK(oracle::induced_exists(make_cycle(6), make_cycle(6)));
}

TEST_CASE("oracle internal consistency: injective homs vs subgraph copies") {
    Rng rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        Graph h = random_graph_gnp(8, 0.45, rng);
        for (const auto &g : {make_path(4), make_cycle(4), make_star(3), make_clique(3)}) {
            Count inj = oracle::injective_hom_count(g, h);
            CHECK(inj == oracle::sub_count(g, h) * Count(automorphism_count(g)));
        }
    }
}

TEST_CASE("hom multiplicativity over disjoint pattern components") {
    Rng rng(102);
    Graph p3_plus_k2 =
        Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    for (int trial = 0; trial < 10; ++trial) {
        Graph h = random_graph_gnp(7, 0.5, rng);
        CHECK(oracle::hom_count(p3_plus_k2, h) ==
              oracle::hom_count(make_path(3), h) * oracle::hom_count(make_clique(2), h));
    }
}

TEST_CASE("constraint filter") {
    // sigma(0) < sigma(1) on K2 into K3: half of the 6 ordered edges survive
    ConstraintSet less{SymmetryConstraint::less(0, 1)};
    CHECK(oracle::hom_count(make_clique(2), make_clique(3), less) == 3);
    ConstraintSet min_of{SymmetryConstraint::min_of(0, {0, 1, 2})};
    CHECK(oracle::hom_count(make_clique(3), make_clique(3), min_of) == 2);
}

TEST_CASE("induced count") {
    CHECK(oracle::induced_count(make_cycle(4), make_biclique(2, 3)) == 3);
    CHECK(oracle::induced_count(make_path(3), make_clique(3)) == 0);
    CHECK(oracle::induced_count(make_path(3), make_path(3)) == 1);
}
