#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sparsehom/cli.hpp"
#include "sparsehom/graph.hpp"
#include "sparsehom/rng.hpp"

using namespace sparsehom;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char *> argv{"sparsehom"};
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_host(const Graph &g, const std::string &name) {
    auto path = (fs::temp_directory_path() / name).string();
    std::ofstream f(path);
    write_edge_list(f, g);
    return path;
}

}  // namespace

TEST_CASE("count-sub on K4") {
    auto host = write_host(make_clique(4), "sparsehom_cli_k4.el");
    auto r = run({"count-sub", "--pattern", "cycle:4", "--host", host});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    auto r2 = run({"count-sub", "--pattern", "cycle:4", "--host", host, "--mode", "poly-space"});
    CHECK(r2.out == "3\n");
    fs::remove(host);
}

TEST_CASE("count-hom and mode independence") {
    auto host = write_host(make_path(4), "sparsehom_cli_p4.el");
    auto a = run({"count-hom", "--pattern", "star:3", "--host", host});
    auto b = run({"count-hom", "--pattern", "star:3", "--host", host, "--mode", "poly-space"});
    CHECK(a.code == 0);
    CHECK(a.out == "18\n");
    CHECK(b.out == a.out);
    fs::remove(host);
}

TEST_CASE("analyze prints parameter and witness") {
    auto r = run({"analyze", "--graph", "cycle:5", "--param", "mtw"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 2) == "3\n");
    CHECK(r.out.find("treedecomp") != std::string::npos);
    CHECK(r.out.find("match") != std::string::npos);
    auto td = run({"analyze", "--graph", "path:8", "--param", "td"});
    CHECK(td.out.substr(0, 2) == "4\n");
    CHECK(td.out.find("elimtree") != std::string::npos);
    auto mtd = run({"analyze", "--graph", "path:8", "--param", "mtd"});
    CHECK(mtd.out.substr(0, 2) == "5\n");
}

TEST_CASE("detect-induced exit codes") {
    auto c6 = write_host(make_cycle(6), "sparsehom_cli_c6.el");
    auto found = run({"detect-induced", "--pattern", "c6", "--host", c6, "--trials", "32",
                      "--seed", "7"});
    CHECK(found.code == 0);
    CHECK(found.out == "found\n");
    auto k6 = write_host(make_clique(6), "sparsehom_cli_k6.el");
    auto nf = run({"detect-induced", "--pattern", "c6", "--host", k6, "--trials", "8",
                   "--seed", "7"});
    CHECK(nf.code == 1);
    CHECK(nf.out == "not-found\n");
    fs::remove(c6);
    fs::remove(k6);
}

TEST_CASE("identical inputs and seed give identical output") {
    Rng rng(151);
    auto host = write_host(random_graph_gnp(10, 0.4, rng), "sparsehom_cli_rand.el");
    auto a = run({"detect-induced", "--pattern", "pbar:5", "--host", host, "--seed", "9"});
    auto b = run({"detect-induced", "--pattern", "pbar:5", "--host", host, "--seed", "9"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    fs::remove(host);
}

TEST_CASE("spasm table and cache output") {
    auto r = run({"spasm", "--pattern", "cycle:4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coeff 1/8") != std::string::npos);
    auto cache_path = (fs::temp_directory_path() / "sparsehom_cli_cache.txt").string();
    auto r2 = run({"spasm", "--pattern", "cycle:5", "--attach", "mtw:3", "--out", cache_path});
    CHECK(r2.code == 0);
    CHECK(fs::exists(cache_path));
    fs::remove(cache_path);
}

TEST_CASE("input errors exit 2 with a one-line diagnostic") {
    auto missing = run({"count-sub", "--pattern", "cycle:4", "--host", "/nonexistent.el"});
    CHECK(missing.code == 2);
    CHECK(!missing.err.empty());
    auto badpat = run({"count-sub", "--pattern", "hexagon", "--host", "/nonexistent.el"});
    CHECK(badpat.code == 2);
    // self-loop host
    auto loop_path = (fs::temp_directory_path() / "sparsehom_cli_loop.el").string();
    std::ofstream f(loop_path);
    f << "5 5\n";
    f.close();
    auto loop = run({"count-sub", "--pattern", "cycle:4", "--host", loop_path});
    CHECK(loop.code == 2);
    fs::remove(loop_path);
}

TEST_CASE("gen produces a loadable graph") {
    auto path = (fs::temp_directory_path() / "sparsehom_cli_gen.el").string();
    auto r = run({"gen", "--n", "20", "--m", "30", "--seed", "5", "--out", path});
    CHECK(r.code == 0);
    auto g = load_edge_list_file(path);
    CHECK(g.graph.edge_count() == 30);
    fs::remove(path);
}
