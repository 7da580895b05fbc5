#include <doctest.h>

#include "sparsehom/oracle.hpp"
#include "sparsehom/plan.hpp"
#include "sparsehom/rng.hpp"

using namespace sparsehom;

TEST_CASE("count_subgraphs fixed examples") {
    auto p = make_plan(make_cycle(4), PlanMode::ConstSpace);
    CHECK(count_subgraphs(p, make_clique(4)) == 3);
    auto p6 = make_plan(make_cycle(6), PlanMode::PolySpace);
    CHECK(count_subgraphs(p6, make_clique(6)) == 60);
    auto p3 = make_plan(make_path(3), PlanMode::ConstSpace);
    CHECK(count_subgraphs(p3, make_star(5)) == 10);
}

TEST_CASE("count_subgraphs equals the oracle in both modes") {
    Rng rng(103);
    for (const char *name : {"path:5", "cycle:5", "k4-e", "star:4"}) {
        Graph g = make_pattern(name);
        auto c_plan = make_plan(g, PlanMode::ConstSpace);
        auto p_plan = make_plan(g, PlanMode::PolySpace);
        for (int trial = 0; trial < 6; ++trial) {
            Graph h = random_graph_gnp(4 + static_cast<int>(rng.below(6)), 0.45, rng);
            Count expect = oracle::sub_count(g, h);
            CHECK(count_subgraphs(c_plan, h) == expect);
            CHECK(count_subgraphs(p_plan, h) == expect);
        }
    }
}

TEST_CASE("plan exponents match the table rows") {
    auto c11 = make_plan(make_cycle(11), PlanMode::ConstSpace);
    CHECK(c11.predicted_exponent == 3);
    for (const auto &t : c11.terms) CHECK(t.mtd_witness->depth() <= 6);

    auto p10 = make_plan(make_path(10), PlanMode::PolySpace);
    CHECK(p10.predicted_exponent == 2);
    for (const auto &t : p10.terms) CHECK(t.mtw_witness->width() <= 3);

    auto c9 = make_plan(make_cycle(9), PlanMode::PolySpace);
    CHECK(c9.predicted_exponent == 2);
}

TEST_CASE("count_homs matches the oracle, including disconnected patterns") {
    Rng rng(107);
    Graph two_paths = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    Graph with_isolated = Graph::from_edges(4, {{0, 1}, {1, 2}});
    for (int trial = 0; trial < 8; ++trial) {
        Graph h = random_graph_gnp(8, 0.4, rng);
        CHECK(count_homs(make_star(3), h, PlanMode::ConstSpace) ==
              oracle::hom_count(make_star(3), h));
        CHECK(count_homs(two_paths, h, PlanMode::PolySpace) == oracle::hom_count(two_paths, h));
        CHECK(count_homs(with_isolated, h, PlanMode::ConstSpace) ==
              oracle::hom_count(with_isolated, h));
    }
    CHECK(count_homs(make_clique(2), make_path(5), PlanMode::ConstSpace) == 8);
    CHECK(count_homs(make_star(3), make_path(4), PlanMode::ConstSpace) == 18);
}

TEST_CASE("mode equivalence on a planted instance") {
    Rng rng(109);
    Graph host = planted_host(make_cycle(7), 3, 8, rng);
    for (const char *name : {"cycle:7", "path:6"}) {
        Graph g = make_pattern(name);
        auto a = make_plan(g, PlanMode::ConstSpace);
        auto b = make_plan(g, PlanMode::PolySpace);
        CHECK(count_subgraphs(a, host) == count_subgraphs(b, host));
        CHECK(count_subgraphs(a, host) == oracle::sub_count(g, host));
    }
}

TEST_CASE("threaded evaluation matches sequential") {
    Rng rng(113);
    Graph g = make_cycle(6);
    auto plan1 = make_plan(g, PlanMode::ConstSpace, 1);
    auto plan4 = make_plan(g, PlanMode::ConstSpace, 4);
    Graph h = random_graph_gnp(10, 0.4, rng);
    CHECK(count_subgraphs(plan1, h, 1) == count_subgraphs(plan4, h, 4));
}
