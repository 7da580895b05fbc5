#include "sparsehom/oracle.hpp"

#include <algorithm>
#include <functional>

namespace sparsehom::oracle {

namespace {

void check_guards(const Graph &g, const Graph &h) {
    if (g.vertex_count() > 8) throw GraphError("oracle pattern guard: > 8 vertices");
    if (h.vertex_count() > 14) throw GraphError("oracle host guard: > 14 vertices");
}

// Order pattern vertices so that each one after the first in its component
// has an already-placed neighbor; keeps the backtracking adjacency-driven.
std::vector<Vertex> exploration_order(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int start = 0;
        while (placed[start]) ++start;
        order.push_back(start);
        placed[start] = 1;
        std::size_t scan = order.size() - 1;
        while (scan < order.size()) {
            for (Vertex u : g.neighbors(order[scan]))
                if (!placed[u]) {
                    placed[u] = 1;
                    order.push_back(u);
                }
            ++scan;
        }
    }
    return order;
}

struct Backtracker {
    const Graph &g;
    const Graph &h;
    const ConstraintSet &filter;
    bool injective;
    std::vector<Vertex> order;
    std::vector<Vertex> image;
    std::vector<char> used;
    Count total = 0;

    void place(std::size_t idx) {
        if (idx == order.size()) {
            if (filter.empty() || all_satisfied(filter, image)) ++total;
            return;
        }
        Vertex v = order[idx];
        // Candidates: neighbors of some already-mapped pattern neighbor, or
        // every host vertex when v starts a new component.
        Vertex anchor = -1;
        for (Vertex u : g.neighbors(v))
            if (image[u] >= 0) {
                anchor = u;
                break;
            }
        auto try_vertex = [&](Vertex x) {
            if (injective && used[x]) return;
            for (Vertex u : g.neighbors(v))
                if (image[u] >= 0 && !h.has_edge(image[u], x)) return;
            image[v] = x;
            if (injective) used[x] = 1;
            place(idx + 1);
            image[v] = -1;
            if (injective) used[x] = 0;
        };
        if (anchor >= 0) {
            for (Vertex x : h.neighbors(image[anchor])) try_vertex(x);
        } else {
            for (Vertex x = 0; x < h.vertex_count(); ++x) try_vertex(x);
        }
    }
};

Count count_maps(const Graph &g, const Graph &h, const ConstraintSet &filter, bool injective) {
    check_guards(g, h);
    if (g.vertex_count() == 0) return 1;
    if (h.vertex_count() == 0) return 0;
    Backtracker bt{g, h, filter, injective, exploration_order(g),
                   std::vector<Vertex>(g.vertex_count(), -1),
                   std::vector<char>(h.vertex_count(), 0)};
    bt.place(0);
    return bt.total;
}

}  // namespace

Count hom_count(const Graph &g, const Graph &h, const ConstraintSet &filter) {
    return count_maps(g, h, filter, false);
}

Count injective_hom_count(const Graph &g, const Graph &h, const ConstraintSet &filter) {
    return count_maps(g, h, filter, true);
}

Count sub_count(const Graph &g, const Graph &h) {
    Count inj = injective_hom_count(g, h);
    Count aut = automorphism_count(g);
    // Every subgraph copy is hit by exactly |Aut(g)| injective maps.
    Count copies = inj / aut;
    if (copies * aut != inj) throw GraphError("oracle: injective count not divisible by |Aut|");
    return copies;
}

namespace {

bool induced_iso_exists(const Graph &g, const Graph &h, std::vector<Vertex> &chosen,
                        std::vector<Vertex> &image, std::vector<char> &used, std::size_t idx) {
    // Map pattern vertex idx onto some unused host vertex with exact adjacency
    // to all previously mapped vertices.
    if (idx == static_cast<std::size_t>(g.vertex_count())) return true;
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        if (used[x]) continue;
        bool ok = true;
        for (std::size_t p = 0; p < idx && ok; ++p)
            if (g.has_edge(static_cast<Vertex>(p), static_cast<Vertex>(idx)) !=
                h.has_edge(image[p], x))
                ok = false;
        if (!ok) continue;
        image[idx] = x;
        used[x] = 1;
        if (induced_iso_exists(g, h, chosen, image, used, idx + 1)) return true;
        used[x] = 0;
    }
    return false;
}

}  // namespace

bool induced_exists(const Graph &g, const Graph &h) {
    check_guards(g, h);
    if (g.vertex_count() > h.vertex_count()) return false;
    std::vector<Vertex> chosen, image(g.vertex_count(), -1);
    std::vector<char> used(h.vertex_count(), 0);
    return induced_iso_exists(g, h, chosen, image, used, 0);
}

Count induced_count(const Graph &g, const Graph &h) {
    check_guards(g, h);
    const int k = g.vertex_count();
    if (k > h.vertex_count()) return 0;
    // Enumerate k-subsets; isomorphism test each induced subgraph.
    std::vector<Vertex> subset(k);
    Count total = 0;
    auto g_canon = canonical_form(g);
    std::function<void(int, int)> rec = [&](int next, int depth) {
        if (depth == k) {
            std::vector<std::pair<Vertex, Vertex>> e;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (h.has_edge(subset[i], subset[j])) e.emplace_back(i, j);
            if (canonical_form(Graph::from_edges(k, e)) == g_canon) ++total;
            return;
        }
        for (int v = next; v <= h.vertex_count() - (k - depth); ++v) {
            subset[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace sparsehom::oracle
