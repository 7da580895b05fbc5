#include "sparsehom/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "sparsehom/formats.hpp"
#include "sparsehom/homcount.hpp"
#include "sparsehom/induced.hpp"
#include "sparsehom/plan.hpp"
#include "sparsehom/rng.hpp"
#include "sparsehom/spasm.hpp"

namespace sparsehom {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eedc0de;

Graph resolve_graph(const std::string &spec) {
    if (std::filesystem::exists(spec)) return load_edge_list_file(spec).graph;
    return make_pattern(spec);
}

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

struct CommonOpts {
    std::string pattern, host;
    std::string mode = "const-space";
    int threads = default_threads();
};

PlanMode parse_mode(const std::string &mode) {
    if (mode == "const-space") return PlanMode::ConstSpace;
    if (mode == "poly-space") return PlanMode::PolySpace;
    throw GraphError("unknown mode: " + mode + " (use const-space or poly-space)");
}

std::uint64_t parse_seed(const std::string &seed) {
    if (seed == "random") return std::random_device{}();
    return std::stoull(seed);
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"pattern counting and induced-pattern detection in sparse graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string detect_pattern, seed_text = std::to_string(kDefaultSeed);
    int trials = 32;
    std::string spasm_pattern, attach_spec, out_path;
    std::string analyze_graph, analyze_param;
    int gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 1;

    auto add_common = [&](CLI::App *cmd, bool with_mode) {
        cmd->add_option("--host", opts.host, "host graph edge-list file")->required();
        cmd->add_option("--threads", opts.threads, "worker thread cap");
        if (with_mode)
            cmd->add_option("--mode", opts.mode, "const-space or poly-space");
    };

    auto *count_sub = app.add_subcommand("count-sub", "count subgraph copies of a pattern");
    count_sub->add_option("--pattern", opts.pattern, "pattern name or edge-list file")->required();
    add_common(count_sub, true);

    auto *count_hom = app.add_subcommand("count-hom", "count homomorphisms from a pattern");
    count_hom->add_option("--pattern", opts.pattern, "pattern name or edge-list file")->required();
    add_common(count_hom, true);

    auto *detect = app.add_subcommand("detect-induced", "detect an induced pattern");
    detect->add_option("--pattern", detect_pattern, "c6 or pbar:<k>")->required();
    detect->add_option("--trials", trials, "random evaluation rounds");
    detect->add_option("--seed", seed_text, "seed (integer or 'random')");
    add_common(detect, false);

    auto *spasm_cmd = app.add_subcommand("spasm", "print the spasm of a pattern");
    spasm_cmd->add_option("--pattern", spasm_pattern, "pattern name")->required();
    spasm_cmd->add_option("--attach", attach_spec, "mtd:<depth> or mtw:<width>");
    spasm_cmd->add_option("--out", out_path, "write a cache file here");
    spasm_cmd->add_option("--threads", opts.threads, "worker thread cap");

    auto *analyze = app.add_subcommand("analyze", "exact structural parameters");
    analyze->add_option("--graph", analyze_graph, "graph file or pattern name")->required();
    analyze->add_option("--param", analyze_param, "mtd, mtw or td")->required();

    auto *gen = app.add_subcommand("gen", "random host generator (testing helper)");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--m", gen_m)->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (count_sub->parsed() || count_hom->parsed()) {
            Graph pattern = resolve_graph(opts.pattern);
            Graph host = load_edge_list_file(opts.host).graph;
            PlanMode mode = parse_mode(opts.mode);
            if (count_hom->parsed()) {
                out << count_homs(pattern, host, mode).convert_to<std::string>() << '\n';
            } else {
                if (!pattern.is_connected())
                    throw GraphError("count-sub requires a connected pattern");
                auto plan = make_plan(pattern, mode, opts.threads);
                out << count_subgraphs(plan, host, opts.threads).convert_to<std::string>()
                    << '\n';
            }
            return 0;
        }
        if (detect->parsed()) {
            Graph host = load_edge_list_file(opts.host).graph;
            DetectionRecipe recipe;
            auto name = parse_pattern_name(detect_pattern);
            if (name.family == PatternFamily::Cycle && name.a == 6)
                recipe = build_c6_recipe();
            else if (name.family == PatternFamily::ComplementPath)
                recipe = build_pbar_recipe(name.a);
            else
                throw GraphError("detect-induced supports c6 and pbar:<k> only");
            bool found = detect_induced(recipe, host, trials, parse_seed(seed_text), opts.threads);
            out << (found ? "found" : "not-found") << '\n';
            return found ? 0 : 1;
        }
        if (spasm_cmd->parsed()) {
            Graph pattern = make_pattern(spasm_pattern);
            auto terms = spasm_with_coefficients(pattern);
            if (!attach_spec.empty()) {
                auto colon = attach_spec.find(':');
                if (colon == std::string::npos) throw GraphError("--attach wants mtd:<d> or mtw:<w>");
                std::string kind = attach_spec.substr(0, colon);
                int budget = std::stoi(attach_spec.substr(colon + 1));
                if (kind == "mtd")
                    attach_decompositions(terms, AttachMode::Mtd, budget, opts.threads);
                else if (kind == "mtw")
                    attach_decompositions(terms, AttachMode::Mtw, budget, opts.threads);
                else
                    throw GraphError("--attach wants mtd:<d> or mtw:<w>");
            }
            for (const auto &t : terms) {
                out << t.form.to_string() << "  coeff " << t.coefficient.convert_to<std::string>();
                if (t.mtd_witness) out << "  mtd-depth " << t.mtd_witness->depth();
                if (t.mtw_witness) out << "  mtw-width " << t.mtw_witness->width();
                out << '\n';
            }
            if (!out_path.empty()) {
                SpasmCache cache;
                cache.entries.emplace(spasm_pattern, std::move(terms));
                save_cache(cache, out_path);
            }
            return 0;
        }
        if (analyze->parsed()) {
            Graph g = resolve_graph(analyze_graph);
            if (analyze_param == "td") {
                out << exact_td(g) << '\n';
                write_elim_tree(out, exact_td_witness(g));
            } else if (analyze_param == "mtd") {
                auto r = exact_mtd(g);
                out << r.depth << '\n';
                write_elim_tree(out, r.witness.tree);
            } else if (analyze_param == "mtw") {
                auto r = exact_mtw(g);
                out << r.width << '\n';
                write_matched_tree_decomposition(out, r.witness);
            } else {
                throw GraphError("--param wants mtd, mtw or td");
            }
            return 0;
        }
        if (gen->parsed()) {
            Rng rng(gen_seed);
            Graph g = random_graph_gnm(gen_n, gen_m, rng);
            if (out_path.empty()) {
                write_edge_list(out, g);
            } else {
                std::ofstream f(out_path);
                if (!f) throw GraphError("cannot write " + out_path);
                write_edge_list(f, g);
            }
            return 0;
        }
    } catch (const ConsistencyError &e) {
        err << "internal-consistency failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sparsehom
