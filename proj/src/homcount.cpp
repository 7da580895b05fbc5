#include "sparsehom/homcount.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <unordered_map>

namespace sparsehom {

// ---------------------------------------------------------------------------
// Constant-space counting over a matched elimination tree

namespace {

struct MtdCounter {
    const Graph &g;
    const Graph &h;
    const std::vector<std::vector<Vertex>> kids;
    const std::vector<PathRole> &roles;
    std::vector<Vertex> image;  // pattern vertex -> host vertex, -1 unset

    MtdCounter(const Graph &g_, const MatchedEliminationTree &t, const Graph &h_)
        : g(g_), h(h_), kids(t.tree.children()), roles(t.roles),
          image(g_.vertex_count(), -1) {}

    bool consistent(Vertex v, Vertex x) const {
        for (Vertex q : g.neighbors(v))
            if (image[q] >= 0 && !h.has_edge(image[q], x)) return false;
        return true;
    }

    Count subtree(Vertex w) {
        return roles[w] == PathRole::Single ? single(w) : head(w);
    }

    // One head plus its tails consume one pass over the host arcs.
    Count head(Vertex v) {
        Count total = 0;
        const auto &tails = kids[v];
        std::vector<Count> s(tails.size());
        for (Vertex x = 0; x < h.vertex_count(); ++x) {
            if (h.degree(x) == 0) continue;
            if (!consistent(v, x)) continue;
            image[v] = x;
            for (auto &c : s) c = 0;
            for (std::size_t ui = 0; ui < tails.size(); ++ui) {
                Vertex u = tails[ui];
                for (Vertex y : h.neighbors(x)) {
                    if (!consistent(u, y)) continue;
                    image[u] = y;
                    Count prod = 1;
                    for (Vertex w : kids[u]) {
                        prod *= subtree(w);
                        if (prod == 0) break;
                    }
                    image[u] = -1;
                    s[ui] += prod;
                }
            }
            Count block = 1;
            for (const auto &c : s) {
                block *= c;
                if (block == 0) break;
            }
            total += block;
            image[v] = -1;
        }
        return total;
    }

    // Pivot vertex: its image ranges over host neighbors of its parent's
    // image, which is already fixed.
    Count single(Vertex w) {
        Vertex px = image_of_parent(w);
        Count total = 0;
        for (Vertex z : h.neighbors(px)) {
            if (!consistent(w, z)) continue;
            image[w] = z;
            Count prod = 1;
            for (Vertex c : kids[w]) {
                prod *= subtree(c);
                if (prod == 0) break;
            }
            image[w] = -1;
            total += prod;
        }
        return total;
    }

    Vertex image_of_parent(Vertex w) const {
        // The parent of a single is always mapped when we get here.
        for (Vertex q : g.neighbors(w))
            if (image[q] >= 0) return image[q];
        throw GraphError("internal: single vertex without a mapped parent");
    }
};

}  // namespace

Count count_hom_mtd(const Graph &g, const MatchedEliminationTree &t, const Graph &h) {
    if (!verify_matched_elim_tree(g, t))
        throw GraphError("count_hom_mtd: tree is not a matched elimination tree");
    if (g.vertex_count() == 1) return h.vertex_count();
    if (h.vertex_count() == 0) return 0;
    MtdCounter counter(g, t, h);
    return counter.head(t.tree.root);
}

// ---------------------------------------------------------------------------
// Circuit construction over a matched tree decomposition

namespace {

struct RootedBag {
    std::vector<Vertex> verts;
    std::vector<std::pair<Vertex, Vertex>> matching;
    Vertex odd = -1;          // unmatched vertex, if any
    Vertex odd_anchor = -1;   // a matched bag neighbor of odd
    std::vector<std::pair<Vertex, Vertex>> edges;  // pattern edges inside the bag
    std::vector<Vertex> own_verts;                 // assigned here (topmost rule)
    std::vector<Vertex> parent_iface;              // X(B ^ parent), ascending
    std::vector<int> child_ids;
    std::vector<std::vector<Vertex>> child_iface;
    std::vector<const SymmetryConstraint *> checks;  // anchored here
    int parent = -1;
    int depth = 0;
};

struct TupleHash {
    std::size_t operator()(const std::vector<Vertex> &v) const {
        std::size_t h = 1469598103934665603ull;
        for (Vertex x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::size_t HomCircuit::term_count() const {
    std::size_t n = 0;
    for (const auto &g : gates)
        for (const auto &grp : g.groups) n += grp.monomials.size();
    return n;
}

HomCircuit build_hom_circuit(const Graph &g, const MatchedTreeDecomposition &d, const Graph &h,
                             const ConstraintSet &constraints) {
    if (!verify_matched_td(g, d))
        throw GraphError("build_hom_circuit: not a matched tree decomposition");

    const int nb = static_cast<int>(d.td.bags.size());
    std::vector<RootedBag> bags(nb);
    {
        std::vector<std::vector<int>> adj(nb);
        for (auto [x, y] : d.td.tree_edges) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        std::vector<int> order{0};
        std::vector<char> seen(nb, 0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int b = order[i];
            for (int c : adj[b])
                if (!seen[c]) {
                    seen[c] = 1;
                    bags[c].parent = b;
                    bags[c].depth = bags[b].depth + 1;
                    bags[b].child_ids.push_back(c);
                    order.push_back(c);
                }
        }
        for (int b = 0; b < nb; ++b) {
            bags[b].verts = d.td.bags[b];
            std::sort(bags[b].verts.begin(), bags[b].verts.end());
            bags[b].matching = d.matchings[b];
        }
    }

    auto in_bag = [&](int b, Vertex v) {
        return std::binary_search(bags[b].verts.begin(), bags[b].verts.end(), v);
    };

    // Topmost bag (shallowest, smallest id) owning each vertex and edge.
    auto topmost_with = [&](std::vector<Vertex> req) {
        int best = -1;
        for (int b = 0; b < nb; ++b) {
            bool all = true;
            for (Vertex v : req) all = all && in_bag(b, v);
            if (!all) continue;
            if (best < 0 || bags[b].depth < bags[best].depth) best = b;
        }
        return best;
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        bags[topmost_with({v})].own_verts.push_back(v);
    for (int b = 0; b < nb; ++b) {
        const auto &bv = bags[b].verts;
        for (std::size_t i = 0; i < bv.size(); ++i)
            for (std::size_t j = i + 1; j < bv.size(); ++j)
                if (g.has_edge(bv[i], bv[j])) bags[b].edges.emplace_back(bv[i], bv[j]);
    }

    for (int b = 0; b < nb; ++b) {
        auto &bag = bags[b];
        std::vector<char> covered(g.vertex_count(), 0);
        for (auto [u, v] : bag.matching) covered[u] = covered[v] = 1;
        for (Vertex v : bag.verts)
            if (!covered[v]) bag.odd = v;
        if (bag.odd >= 0) {
            for (Vertex v : bag.verts)
                if (v != bag.odd && g.has_edge(bag.odd, v)) bag.odd_anchor = v;
            if (bag.odd_anchor < 0)
                throw GraphError("build_hom_circuit: unmatched vertex has no bag neighbor");
        }
        if (bag.parent >= 0) {
            for (Vertex v : bag.verts)
                if (in_bag(bag.parent, v)) bag.parent_iface.push_back(v);
        }
    }
    for (int b = 0; b < nb; ++b)
        for (int c : bags[b].child_ids) bags[b].child_iface.push_back(bags[c].parent_iface);

    for (const auto &c : constraints) {
        int anchor = topmost_with(c.referenced());
        if (anchor < 0)
            throw GraphError("constraint references vertices not co-resident in any bag");
        bags[anchor].checks.push_back(&c);
    }

    // Deepest-first order so child gates exist before their consumers.
    std::vector<int> build_order(nb);
    std::iota(build_order.begin(), build_order.end(), 0);
    std::sort(build_order.begin(), build_order.end(), [&](int a, int b) {
        return bags[a].depth != bags[b].depth ? bags[a].depth > bags[b].depth : a < b;
    });

    HomCircuit circuit;
    // gate tables: per bag, interface image tuple -> gate id
    std::vector<std::unordered_map<std::vector<Vertex>, int, TupleHash>> table(nb);
    std::vector<Vertex> image(g.vertex_count(), -1);

    auto emit = [&](int b, const std::function<void(std::vector<Vertex> &&, std::vector<int> &&)> &sink) {
        auto &bag = bags[b];
        const int k = static_cast<int>(bag.matching.size());
        std::vector<std::pair<Vertex, Vertex>> arc(k, {0, 0});

        auto try_assignment = [&]() {
            for (auto [u, v] : bag.edges)
                if (!h.has_edge(image[u], image[v])) return;
            for (const auto *c : bag.checks) {
                if (c->kind == SymmetryConstraint::Kind::Less) {
                    if (!(image[c->a] < image[c->b])) return;
                } else {
                    Vertex m = image[c->members.front()];
                    for (Vertex v : c->members) m = std::min(m, image[v]);
                    if (image[c->a] != m) return;
                }
            }
            std::vector<int> child_gates;
            child_gates.reserve(bag.child_ids.size());
            for (std::size_t ci = 0; ci < bag.child_ids.size(); ++ci) {
                std::vector<Vertex> key;
                key.reserve(bag.child_iface[ci].size());
                for (Vertex v : bag.child_iface[ci]) key.push_back(image[v]);
                auto it = table[bag.child_ids[ci]].find(key);
                if (it == table[bag.child_ids[ci]].end()) return;  // zero gate
                child_gates.push_back(it->second);
            }
            std::vector<Vertex> mono;
            mono.reserve(bag.own_verts.size());
            for (Vertex v : bag.own_verts) mono.push_back(image[v]);
            sink(std::move(mono), std::move(child_gates));
        };

        // Enumerate matching-edge images over host arcs, then the odd vertex
        // (if any) over neighbors of its anchor's image.
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                if (bag.odd < 0) {
                    try_assignment();
                    return;
                }
                for (Vertex z : h.neighbors(image[bag.odd_anchor])) {
                    image[bag.odd] = z;
                    try_assignment();
                }
                image[bag.odd] = -1;
                return;
            }
            auto [a, bvert] = bag.matching[i];
            for (Vertex x = 0; x < h.vertex_count(); ++x) {
                for (Vertex y : h.neighbors(x)) {
                    image[a] = x;
                    image[bvert] = y;
                    rec(i + 1);
                }
            }
            image[a] = -1;
            image[bvert] = -1;
        };
        rec(0);
    };

    // Group terms per gate by their child-gate tuple.
    auto regroup = [](std::map<std::vector<int>, std::vector<std::vector<Vertex>>> &&raw) {
        HomCircuit::Gate gate;
        for (auto &[gates, monos] : raw) {
            HomCircuit::TermGroup grp;
            grp.gates = gates;
            grp.monomials = std::move(monos);
            gate.groups.push_back(std::move(grp));
        }
        return gate;
    };

    for (int b : build_order) {
        auto &bag = bags[b];
        if (bag.parent < 0) {
            std::map<std::vector<int>, std::vector<std::vector<Vertex>>> raw;
            emit(b, [&](std::vector<Vertex> &&mono, std::vector<int> &&gates) {
                raw[gates].push_back(std::move(mono));
            });
            circuit.gates.push_back(regroup(std::move(raw)));
            circuit.output = static_cast<int>(circuit.gates.size()) - 1;
        } else {
            // one raw accumulator per interface image
            std::unordered_map<std::vector<Vertex>,
                               std::map<std::vector<int>, std::vector<std::vector<Vertex>>>,
                               TupleHash>
                raw;
            emit(b, [&](std::vector<Vertex> &&mono, std::vector<int> &&gates) {
                std::vector<Vertex> key;
                key.reserve(bag.parent_iface.size());
                for (Vertex v : bag.parent_iface) key.push_back(image[v]);
                raw[key][gates].push_back(std::move(mono));
            });
            for (auto &[key, groups] : raw) {
                circuit.gates.push_back(regroup(std::move(groups)));
                table[b][key] = static_cast<int>(circuit.gates.size()) - 1;
            }
        }
    }
    if (circuit.output < 0) throw GraphError("internal: circuit has no output gate");
    return circuit;
}

Count count_hom_mtw(const Graph &g, const MatchedTreeDecomposition &d, const Graph &h) {
    if (g.vertex_count() == 1) return h.vertex_count();
    if (h.vertex_count() == 0) return 0;
    auto c = build_hom_circuit(g, d, h);
    return evaluate_circuit(c, CountingRing{});
}

}  // namespace sparsehom
