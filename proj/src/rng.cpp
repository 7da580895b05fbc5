#include "sparsehom/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sparsehom {

Graph random_graph_gnp(int n, double p, Rng &rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph random_graph_gnm(int n, int m, Rng &rng) {
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (m > all) m = static_cast<int>(all);
    std::set<std::pair<Vertex, Vertex>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        chosen.emplace(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(n, {chosen.begin(), chosen.end()});
}

Graph planted_host(const Graph &pattern, int extra_vertices, int noise_edges, Rng &rng) {
    int n = pattern.vertex_count() + extra_vertices;
    std::set<std::pair<Vertex, Vertex>> chosen;
    for (auto [u, v] : pattern.edges()) chosen.emplace(u, v);
    int wanted = static_cast<int>(chosen.size()) + noise_edges;
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    wanted = static_cast<int>(std::min<long long>(wanted, all));
    while (static_cast<int>(chosen.size()) < wanted) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        chosen.emplace(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(n, {chosen.begin(), chosen.end()});
}

Graph random_relabel(const Graph &g, Rng &rng) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return relabel(g, perm);
}

}  // namespace sparsehom
