#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <filesystem>

#include "sparsehom/oracle.hpp"
#include "sparsehom/rng.hpp"
#include "sparsehom/spasm.hpp"

using namespace sparsehom;

namespace {

Rational plain_sub_via_spasm(const std::vector<SpasmTerm> &terms, const Graph &h) {
    Rational total = 0;
    for (const auto &t : terms) total += t.coefficient * Rational(oracle::hom_count(t.quotient, h));
    return total;
}

}  // namespace

TEST_CASE("spasm of C4 has the known three terms") {
    auto terms = spasm_with_coefficients(make_cycle(4));
    REQUIRE(terms.size() == 3);
    std::map<int, Rational> by_vertices;  // quotient size -> coefficient
    for (const auto &t : terms) by_vertices[t.quotient.vertex_count()] = t.coefficient;
    CHECK(by_vertices[4] == Rational(1, 8));   // C4 itself
    CHECK(by_vertices[3] == Rational(-1, 4));  // P3
    CHECK(by_vertices[2] == Rational(1, 8));   // K2
}

TEST_CASE("spasm of K3 is trivial") {
    auto terms = spasm_with_coefficients(make_clique(3));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coefficient == Rational(1, 6));
    CHECK(terms[0].quotient.vertex_count() == 3);
}

TEST_CASE("spasm identity against the oracle") {
    Rng rng(61);
    for (const char *name : {"path:4", "path:5", "cycle:4", "cycle:5", "star:3", "k4-e"}) {
        Graph g = make_pattern(name);
        auto terms = spasm_with_coefficients(g);
        for (int trial = 0; trial < 8; ++trial) {
            Graph h = random_graph_gnp(3 + static_cast<int>(rng.below(6)), 0.5, rng);
            Rational expanded = plain_sub_via_spasm(terms, h);
            CHECK(expanded == Rational(oracle::sub_count(g, h)));
        }
    }
}

TEST_CASE("spasm nesting: paths extend, cycles extend by two") {
    auto forms_of = [](const Graph &g) {
        std::set<CanonicalForm> s;
        for (const auto &t : spasm_with_coefficients(g)) s.insert(t.form);
        return s;
    };
    auto p7 = forms_of(make_path(7)), p8 = forms_of(make_path(8));
    CHECK(std::includes(p8.begin(), p8.end(), p7.begin(), p7.end()));
    auto c5 = forms_of(make_cycle(5)), c7 = forms_of(make_cycle(7));
    CHECK(std::includes(c7.begin(), c7.end(), c5.begin(), c5.end()));
}

TEST_CASE("attach_decompositions failure reports offenders") {
    auto terms = spasm_with_coefficients(make_clique(5));  // K5 itself is a term
    bool threw = false;
    try {
        attach_decompositions(terms, AttachMode::Mtw, 3);
    } catch (const AttachError &e) {
        threw = true;
        CHECK(!e.offenders.empty());
        bool has_k5 = false;
        for (const auto &f : e.offenders)
            if (f == canonical_form(make_clique(5))) has_k5 = true;
        CHECK(has_k5);
    }
    CHECK(threw);
}

TEST_CASE("attach_decompositions success attaches verified witnesses") {
    auto terms = spasm_with_coefficients(make_cycle(6));
    attach_decompositions(terms, AttachMode::Mtd, 6);
    attach_decompositions(terms, AttachMode::Mtw, 3);
    for (const auto &t : terms) {
        REQUIRE(t.mtd_witness.has_value());
        REQUIRE(t.mtw_witness.has_value());
        CHECK(t.mtd_witness->depth() <= 6);
        CHECK(t.mtw_witness->width() <= 3);
        CHECK(verify_matched_elim_tree(t.quotient, *t.mtd_witness));
        CHECK(verify_matched_td(t.quotient, *t.mtw_witness));
    }
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    auto terms = spasm_with_coefficients(make_cycle(5));
    attach_decompositions(terms, AttachMode::Mtd, 6);
    attach_decompositions(terms, AttachMode::Mtw, 3);
    SpasmCache cache;
    cache.entries.emplace("cycle:5", terms);
    auto path = (fs::temp_directory_path() / "sparsehom_test_cache.txt").string();
    save_cache(cache, path);
    auto back = load_cache(path);
    REQUIRE(back.entries.count("cycle:5") == 1);
    const auto &bt = back.entries["cycle:5"];
    REQUIRE(bt.size() == terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        CHECK(bt[i].form == terms[i].form);
        CHECK(bt[i].coefficient == terms[i].coefficient);
        CHECK(bt[i].mtd_witness.has_value());
        CHECK(bt[i].mtw_witness.has_value());
    }
    // byte-stable: saving the loaded cache reproduces the file
    auto path2 = (fs::temp_directory_path() / "sparsehom_test_cache2.txt").string();
    save_cache(back, path2);
    std::ifstream a(path), b(path2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);

    // truncation detected
    std::ofstream trunc(path2, std::ios::trunc);
    trunc << sa.substr(0, sa.size() / 2);
    trunc.close();
    CHECK_THROWS(load_cache(path2));

    // version mismatch detected
    std::ofstream vf(path2, std::ios::trunc);
    vf << "spasmcache 999\nend spasmcache\n";
    vf.close();
    CHECK_THROWS(load_cache(path2));
    fs::remove(path);
    fs::remove(path2);
}
