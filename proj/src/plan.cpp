#include "sparsehom/plan.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "sparsehom/homcount.hpp"

namespace sparsehom {

namespace {

void run_indexed(std::size_t count, int threads, const std::function<void(std::size_t)> &job) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<std::size_t>(threads, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                job(i);
            }
        });
    for (auto &t : pool) t.join();
}

int ceil_div2(int x) { return (x + 1) / 2; }

}  // namespace

CountPlan make_plan(const Graph &pattern, PlanMode mode, std::vector<SpasmTerm> terms,
                    int threads) {
    CountPlan p;
    p.pattern = pattern;
    p.mode = mode;
    p.terms = std::move(terms);

    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        bool have = mode == PlanMode::ConstSpace ? p.terms[i].mtd_witness.has_value()
                                                 : p.terms[i].mtw_witness.has_value();
        if (!have) missing.push_back(i);
    }
    run_indexed(missing.size(), threads, [&](std::size_t mi) {
        auto &term = p.terms[missing[mi]];
        if (mode == PlanMode::ConstSpace)
            term.mtd_witness = exact_mtd(term.quotient).witness;
        else
            term.mtw_witness = exact_mtw(term.quotient).witness;
    });

    int expo = 0;
    for (const auto &t : p.terms) {
        if (mode == PlanMode::ConstSpace)
            expo = std::max(expo, ceil_div2(t.mtd_witness->depth()));
        else
            expo = std::max(expo, ceil_div2(t.mtw_witness->width() + 1));
    }
    p.predicted_exponent = expo;
    return p;
}

CountPlan make_plan(const Graph &pattern, PlanMode mode, int threads) {
    return make_plan(pattern, mode, spasm_with_coefficients(pattern), threads);
}

Count count_subgraphs(const CountPlan &plan, const Graph &h, int threads) {
    std::vector<Count> per_term(plan.terms.size());
    run_indexed(plan.terms.size(), threads, [&](std::size_t i) {
        const auto &t = plan.terms[i];
        per_term[i] = plan.mode == PlanMode::ConstSpace
                          ? count_hom_mtd(t.quotient, *t.mtd_witness, h)
                          : count_hom_mtw(t.quotient, *t.mtw_witness, h);
    });
    Rational total = 0;
    for (std::size_t i = 0; i < plan.terms.size(); ++i)
        total += plan.terms[i].coefficient * Rational(per_term[i]);
    if (denominator(total) != 1)
        throw ConsistencyError("subgraph count came out non-integral: " +
                               total.convert_to<std::string>());
    return numerator(total);
}

Count count_homs(const Graph &pattern, const Graph &h, PlanMode mode) {
    if (pattern.vertex_count() == 0) return 1;
    // Components multiply; isolated vertices contribute a factor n each.
    auto comp_masks = pattern.component_masks();
    Count total = 1;
    for (auto mask : comp_masks) {
        std::vector<int> keep, idx(pattern.vertex_count(), -1);
        for (int v = 0; v < pattern.vertex_count(); ++v)
            if ((mask >> v) & 1) {
                idx[v] = static_cast<int>(keep.size());
                keep.push_back(v);
            }
        if (keep.size() == 1) {
            total *= h.vertex_count();
            continue;
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto [u, v] : pattern.edges())
            if (idx[u] >= 0 && idx[v] >= 0) edges.emplace_back(idx[u], idx[v]);
        Graph comp = Graph::from_edges(static_cast<int>(keep.size()), edges);
        if (mode == PlanMode::ConstSpace) {
            total *= count_hom_mtd(comp, exact_mtd(comp).witness, h);
        } else {
            total *= count_hom_mtw(comp, exact_mtw(comp).witness, h);
        }
        if (total == 0) break;
    }
    return total;
}

}  // namespace sparsehom
