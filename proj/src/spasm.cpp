#include "sparsehom/spasm.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "sparsehom/formats.hpp"

namespace sparsehom {

namespace {

using Mask = std::uint32_t;

struct PartitionAccumulator {
    const Graph &g;
    std::vector<Mask> nb;
    std::vector<Mask> blocks;
    std::vector<int> block_of;
    std::unordered_map<CanonicalForm, std::pair<boost::multiprecision::cpp_int, Graph>,
                       CanonicalFormHash>
        sums;

    explicit PartitionAccumulator(const Graph &graph) : g(graph) {
        nb.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            nb[v] = static_cast<Mask>(g.neighbor_mask(v));
        block_of.assign(g.vertex_count(), -1);
    }

    void leaf() {
        boost::multiprecision::cpp_int weight = 1;
        for (Mask b : blocks) {
            int sz = __builtin_popcount(b);
            boost::multiprecision::cpp_int f = 1;
            for (int i = 2; i < sz; ++i) f *= i;  // (sz-1)!
            if (sz > 1) f *= (sz - 1);
            weight *= (sz % 2 == 1) ? f : -f;
        }
        Graph q = quotient(g, block_of, static_cast<int>(blocks.size()));
        auto labeling = canonical_labeling(q);
        Graph canon_q = relabel(q, labeling);
        auto form = canonical_form(canon_q);
        auto it = sums.find(form);
        if (it == sums.end())
            sums.emplace(form, std::make_pair(weight, canon_q));
        else
            it->second.first += weight;
    }

    void enumerate(int v) {
        if (v == g.vertex_count()) {
            leaf();
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (nb[v] & blocks[b]) continue;  // block must stay independent
            blocks[b] |= Mask{1} << v;
            block_of[v] = static_cast<int>(b);
            enumerate(v + 1);
            blocks[b] &= ~(Mask{1} << v);
        }
        blocks.push_back(Mask{1} << v);
        block_of[v] = static_cast<int>(blocks.size()) - 1;
        enumerate(v + 1);
        blocks.pop_back();
        block_of[v] = -1;
    }
};

}  // namespace

std::vector<SpasmTerm> spasm_with_coefficients(const Graph &g) {
    if (g.vertex_count() > 11) throw GraphError("spasm guard: pattern exceeds 11 vertices");
    if (g.vertex_count() == 0 || !g.is_connected())
        throw GraphError("spasm: pattern must be connected and nonempty");

    PartitionAccumulator acc(g);
    acc.enumerate(0);
    boost::multiprecision::cpp_int aut = automorphism_count(g);

    std::vector<SpasmTerm> terms;
    for (auto &[form, entry] : acc.sums) {
        if (entry.first == 0) continue;
        SpasmTerm t;
        t.quotient = std::move(entry.second);
        t.form = form;
        t.coefficient = Rational(entry.first, aut);
        terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end(),
              [](const SpasmTerm &a, const SpasmTerm &b) { return a.form < b.form; });
    return terms;
}

void attach_decompositions(std::vector<SpasmTerm> &terms, AttachMode mode, int budget,
                           int threads) {
    (void)threads;
    std::vector<CanonicalForm> offenders;
    for (auto &term : terms) {
        if (mode == AttachMode::Mtd) {
            auto r = exact_mtd(term.quotient, budget);
            if (!r) {
                offenders.push_back(term.form);
                continue;
            }
            term.mtd_witness = std::move(r->witness);
        } else {
            auto r = exact_mtw(term.quotient, budget);
            if (!r) {
                offenders.push_back(term.form);
                continue;
            }
            term.mtw_witness = std::move(r->witness);
        }
    }
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << (mode == AttachMode::Mtd ? "matched treedepth" : "matched treewidth")
            << " budget " << budget << " failed for " << offenders.size() << " graph(s):";
        for (const auto &f : offenders) msg << ' ' << f.to_string() << ';';
        throw AttachError(msg.str(), offenders);
    }
}

// ---------------------------------------------------------------------------
// Cache serialization

namespace {

constexpr const char *kCacheHeader = "spasmcache 1";
constexpr const char *kCacheTrailer = "end spasmcache";

std::string edges_token(const Graph &g) {
    auto e = g.edges();
    if (e.empty()) return "none";
    std::ostringstream ss;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) ss << ',';
        ss << e[i].first << '-' << e[i].second;
    }
    return ss.str();
}

Graph graph_from_token(int n, const std::string &token) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (token != "none") {
        std::istringstream ss(token);
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto dash = part.find('-');
            if (dash == std::string::npos) throw FormatError("bad edge token: " + part);
            edges.emplace_back(std::stoi(part.substr(0, dash)), std::stoi(part.substr(dash + 1)));
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

void save_cache(const SpasmCache &cache, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write cache file: " + path);
    out << kCacheHeader << '\n';
    for (const auto &[name, terms] : cache.entries) {
        out << "pattern " << name << " terms " << terms.size() << '\n';
        for (const auto &t : terms) {
            out << "graph n=" << t.quotient.vertex_count() << " e=" << edges_token(t.quotient)
                << " coeff " << t.coefficient.convert_to<std::string>() << '\n';
            if (t.mtd_witness) write_elim_tree(out, t.mtd_witness->tree);
            if (t.mtw_witness) write_matched_tree_decomposition(out, *t.mtw_witness);
        }
    }
    out << kCacheTrailer << '\n';
    if (!out) throw FormatError("failed while writing cache file: " + path);
}

SpasmCache load_cache(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open cache file: " + path);
    auto lines = read_lines(in);
    if (lines.empty() || lines[0] != kCacheHeader)
        throw FormatError("cache version mismatch (expected '" + std::string(kCacheHeader) + "')");
    if (lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.back() != kCacheTrailer)
        throw FormatError("cache file truncated (missing trailer)");
    lines.pop_back();

    SpasmCache cache;
    std::size_t pos = 1;
    while (pos < lines.size()) {
        std::istringstream head(lines[pos]);
        std::string kw, name, terms_kw;
        std::size_t count;
        if (!(head >> kw >> name >> terms_kw >> count) || kw != "pattern" || terms_kw != "terms")
            throw FormatError("bad pattern header: " + lines[pos]);
        ++pos;
        std::vector<SpasmTerm> terms;
        for (std::size_t i = 0; i < count; ++i) {
            if (pos >= lines.size()) throw FormatError("cache truncated inside pattern " + name);
            std::istringstream gl(lines[pos]);
            std::string gkw, ntok, etok, ckw, ctok;
            if (!(gl >> gkw >> ntok >> etok >> ckw >> ctok) || gkw != "graph" || ckw != "coeff")
                throw FormatError("bad graph record: " + lines[pos]);
            if (ntok.rfind("n=", 0) != 0 || etok.rfind("e=", 0) != 0)
                throw FormatError("bad graph record: " + lines[pos]);
            ++pos;
            SpasmTerm t;
            t.quotient = graph_from_token(std::stoi(ntok.substr(2)), etok.substr(2));
            t.form = canonical_form(t.quotient);
            t.coefficient = Rational(ctok);
            // optional embedded decompositions
            while (pos < lines.size()) {
                std::istringstream peek(lines[pos]);
                std::string first;
                peek >> first;
                if (first == "elimtree") {
                    auto tree = parse_elim_tree(lines, pos);
                    auto roles = assign_roles(t.quotient, tree);
                    if (!roles || !verify_matched_elim_tree(t.quotient, tree))
                        throw FormatError("cached elimination tree fails verification");
                    t.mtd_witness = MatchedEliminationTree{std::move(tree), std::move(*roles)};
                } else if (first == "treedecomp") {
                    auto mtd = parse_tree_decomposition(lines, pos);
                    if (!verify_matched_td(t.quotient, mtd))
                        throw FormatError("cached tree decomposition fails verification");
                    t.mtw_witness = std::move(mtd);
                } else
                    break;
            }
            terms.push_back(std::move(t));
        }
        cache.entries.emplace(name, std::move(terms));
    }
    return cache;
}

}  // namespace sparsehom
