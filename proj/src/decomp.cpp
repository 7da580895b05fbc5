#include "sparsehom/decomp.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace sparsehom {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return __builtin_popcount(m); }
int lowest(Mask m) { return __builtin_ctz(m); }

std::vector<Mask> neighbor_masks(const Graph &g) {
    std::vector<Mask> nb(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        nb[v] = static_cast<Mask>(g.neighbor_mask(v));
    return nb;
}

std::vector<Mask> components_of(const std::vector<Mask> &nb, Mask mask) {
    std::vector<Mask> comps;
    Mask left = mask;
    while (left) {
        Mask comp = Mask{1} << lowest(left);
        for (;;) {
            Mask grow = comp;
            Mask scan = comp;
            while (scan) {
                int v = lowest(scan);
                scan &= scan - 1;
                grow |= nb[v] & mask;
            }
            if (grow == comp) break;
            comp = grow;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elimination tree basics

std::vector<std::vector<Vertex>> EliminationTree::children() const {
    std::vector<std::vector<Vertex>> kids(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) kids[parent[v]].push_back(static_cast<Vertex>(v));
    return kids;
}

int EliminationTree::depth() const {
    auto kids = children();
    std::function<int(Vertex)> go = [&](Vertex v) {
        int best = 0;
        for (Vertex c : kids[v]) best = std::max(best, go(c));
        return best + 1;
    };
    return parent.empty() ? 0 : go(root);
}

std::vector<std::vector<Vertex>> EliminationTree::root_to_leaf_paths() const {
    auto kids = children();
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> go = [&](Vertex v) {
        cur.push_back(v);
        if (kids[v].empty())
            paths.push_back(cur);
        else
            for (Vertex c : kids[v]) go(c);
        cur.pop_back();
    };
    if (!parent.empty()) go(root);
    return paths;
}

bool verify_elim_tree(const Graph &g, const EliminationTree &t) {
    const int n = g.vertex_count();
    if (t.vertex_count() != n || n == 0) return false;
    if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return false;
    // Every non-root vertex walks up to the root without cycles.
    for (int v = 0; v < n; ++v) {
        if (v == t.root) continue;
        Vertex w = v;
        int steps = 0;
        while (w != t.root) {
            if (w < 0 || w >= n || steps++ > n) return false;
            w = t.parent[w];
        }
    }
    // Every edge joins an ancestor-descendant pair; with that, subtrees of a
    // vertex see no edges between each other, which is what the counting
    // recursion needs.
    std::vector<Mask> anc(n, 0);
    for (int v = 0; v < n; ++v) {
        Vertex w = t.parent[v];
        while (w != -1) {
            anc[v] |= Mask{1} << w;
            w = t.parent[w];
        }
    }
    for (auto [u, v] : g.edges())
        if (!((anc[u] >> v) & 1) && !((anc[v] >> u) & 1)) return false;
    return true;
}

namespace {

bool path_matched(const Graph &g, const std::vector<Vertex> &p) {
    const int k = static_cast<int>(p.size());
    if (k == 1) return g.vertex_count() == 1;
    if (k % 2 == 0) {
        for (int i = 0; i + 1 < k; i += 2)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        return true;
    }
    // Odd: some pivot at 0-indexed odd position j is covered by edges to both
    // path neighbors; everything else pairs up consecutively.
    for (int j = 1; j < k; j += 2) {
        bool ok = true;
        for (int i = 0; i < j && ok; i += 2) ok = g.has_edge(p[i], p[i + 1]);
        if (ok) ok = g.has_edge(p[j], p[j + 1]);
        for (int i = j + 2; i + 1 < k && ok; i += 2) ok = g.has_edge(p[i], p[i + 1]);
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool verify_matched_elim_tree(const Graph &g, const EliminationTree &t) {
    if (!verify_elim_tree(g, t)) return false;
    for (const auto &p : t.root_to_leaf_paths())
        if (!path_matched(g, p)) return false;
    return true;
}

bool verify_matched_elim_tree(const Graph &g, const MatchedEliminationTree &t) {
    if (!verify_matched_elim_tree(g, t.tree)) return false;
    if (t.roles.size() != t.tree.parent.size()) return false;
    if (g.vertex_count() == 1) return true;
    auto kids = t.tree.children();
    // Role grammar: heads pair with every child, tails may hand off to heads
    // or (once per path) a single, singles resume with heads.
    std::function<bool(Vertex, bool)> ok = [&](Vertex v, bool pivot_free) {
        switch (t.roles[v]) {
            case PathRole::Head: {
                if (kids[v].empty()) return false;
                for (Vertex c : kids[v])
                    if (t.roles[c] != PathRole::Tail || !g.has_edge(v, c) || !ok(c, pivot_free))
                        return false;
                return true;
            }
            case PathRole::Tail: {
                for (Vertex c : kids[v]) {
                    if (t.roles[c] == PathRole::Head) {
                        if (!ok(c, pivot_free)) return false;
                    } else if (t.roles[c] == PathRole::Single) {
                        if (!pivot_free || !g.has_edge(v, c) || !ok(c, false)) return false;
                    } else
                        return false;
                }
                return true;
            }
            case PathRole::Single: {
                for (Vertex c : kids[v])
                    if (t.roles[c] != PathRole::Head || !ok(c, false)) return false;
                return true;
            }
        }
        return false;
    };
    return t.roles[t.tree.root] == PathRole::Head && ok(t.tree.root, true);
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> MatchedEliminationTree::path_certificates()
    const {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> certs;
    for (const auto &p : tree.root_to_leaf_paths()) {
        std::vector<std::pair<Vertex, Vertex>> cert;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (roles[p[i]] == PathRole::Tail)
                cert.emplace_back(p[i - 1], p[i]);
            else if (roles[p[i]] == PathRole::Single)
                cert.emplace_back(p[i - 1], p[i]);
        }
        certs.push_back(std::move(cert));
    }
    return certs;
}

std::optional<std::vector<PathRole>> assign_roles(const Graph &g, const EliminationTree &t) {
    const int n = g.vertex_count();
    std::vector<PathRole> roles(n, PathRole::Head);
    if (n == 1) return roles;
    auto kids = t.children();

    std::function<bool(Vertex, bool)> as_head;
    std::function<bool(Vertex, Vertex, bool)> below_tail;

    as_head = [&](Vertex v, bool pivot_free) {
        if (kids[v].empty()) return false;
        for (Vertex c : kids[v])
            if (!g.has_edge(v, c)) return false;
        for (Vertex c : kids[v]) {
            roles[c] = PathRole::Tail;
            for (Vertex gc : kids[c])
                if (!below_tail(gc, c, pivot_free)) return false;
        }
        roles[v] = PathRole::Head;
        return true;
    };
    below_tail = [&](Vertex v, Vertex tail, bool pivot_free) {
        if (as_head(v, pivot_free)) return true;
        if (pivot_free && g.has_edge(tail, v)) {
            roles[v] = PathRole::Single;
            for (Vertex c : kids[v])
                if (!as_head(c, false)) return false;
            return true;
        }
        return false;
    };

    if (!as_head(t.root, true)) return std::nullopt;
    return roles;
}

// ---------------------------------------------------------------------------
// Exact treedepth

namespace {

struct TdSolver {
    const std::vector<Mask> &nb;
    std::unordered_map<Mask, std::pair<int, Vertex>> memo;  // depth, chosen root

    int solve(Mask c) {
        auto it = memo.find(c);
        if (it != memo.end()) return it->second.first;
        if (popcount(c) == 1) {
            memo[c] = {1, static_cast<Vertex>(lowest(c))};
            return 1;
        }
        int best = 1000;
        Vertex best_v = -1;
        for (Mask s = c; s;) {
            int v = lowest(s);
            s &= s - 1;
            int worst = 0;
            for (Mask d : components_of(nb, c & ~(Mask{1} << v)))
                worst = std::max(worst, solve(d));
            if (1 + worst < best) {
                best = 1 + worst;
                best_v = v;
            }
        }
        memo[c] = {best, best_v};
        return best;
    }

    void build(Mask c, Vertex parent, EliminationTree &t) {
        Vertex v = memo.at(c).second;
        t.parent[v] = parent;
        for (Mask d : components_of(nb, c & ~(Mask{1} << v))) build(d, v, t);
    }
};

void check_pattern_input(const Graph &g) {
    require_small(g);
    if (g.vertex_count() == 0) throw GraphError("empty graph");
    if (!g.is_connected()) throw GraphError("disconnected input rejected");
}

}  // namespace

int exact_td(const Graph &g) {
    check_pattern_input(g);
    auto nb = neighbor_masks(g);
    TdSolver solver{nb, {}};
    return solver.solve((Mask{1} << g.vertex_count()) - 1);
}

EliminationTree exact_td_witness(const Graph &g) {
    check_pattern_input(g);
    auto nb = neighbor_masks(g);
    TdSolver solver{nb, {}};
    Mask all = (Mask{1} << g.vertex_count()) - 1;
    solver.solve(all);
    EliminationTree t;
    t.parent.assign(g.vertex_count(), -1);
    solver.build(all, -1, t);
    t.root = solver.memo.at(all).second;
    return t;
}

// ---------------------------------------------------------------------------
// Exact matched treedepth
//
// State: (connected component, context of the path above it). The context is
// one of
//   MustHead          - component root starts a fresh head/tail pair
//   MustTail(p)       - component root must close the pair opened by head p
//   AfterTail(t)      - parent was a tail; root may start a pair or, if the
//                       path has not used its pivot yet, be a single via an
//                       edge to t
// plus the per-path pivot-availability bit.

namespace {

constexpr int kInf = 100;

struct MtdSolver {
    const Graph &g;
    std::vector<Mask> nb;
    // memo[avail][ctx vertex + 1][mask]; ctx vertex is n for MustHead
    std::vector<std::array<std::vector<std::int8_t>, 2>> must_tail, after_tail;
    std::array<std::vector<std::int8_t>, 2> must_head;

    explicit MtdSolver(const Graph &graph) : g(graph), nb(neighbor_masks(graph)) {
        const int n = g.vertex_count();
        const std::size_t words = std::size_t{1} << n;
        must_tail.resize(n);
        after_tail.resize(n);
        for (int v = 0; v < n; ++v)
            for (int a = 0; a < 2; ++a) {
                must_tail[v][a].assign(words, -1);
                after_tail[v][a].assign(words, -1);
            }
        for (int a = 0; a < 2; ++a) must_head[a].assign(words, -1);
    }

    int head(Mask c, bool avail) {
        auto &slot = must_head[avail][c];
        if (slot >= 0) return slot;
        int best = kInf;
        if (popcount(c) >= 2) {
            for (Mask s = c; s;) {
                int v = lowest(s);
                s &= s - 1;
                int worst = 0;
                for (Mask d : components_of(nb, c & ~(Mask{1} << v)))
                    worst = std::max(worst, tail(d, v, avail));
                best = std::min(best, 1 + worst);
            }
        }
        slot = static_cast<std::int8_t>(std::min(best, kInf));
        return slot;
    }

    int tail(Mask c, Vertex head_v, bool avail) {
        auto &slot = must_tail[head_v][avail][c];
        if (slot >= 0) return slot;
        int best = kInf;
        for (Mask s = c & nb[head_v]; s;) {
            int u = lowest(s);
            s &= s - 1;
            int worst = 0;
            for (Mask d : components_of(nb, c & ~(Mask{1} << u)))
                worst = std::max(worst, after(d, u, avail));
            best = std::min(best, 1 + worst);
        }
        slot = static_cast<std::int8_t>(std::min(best, kInf));
        return slot;
    }

    int after(Mask c, Vertex tail_v, bool avail) {
        auto &slot = after_tail[tail_v][avail][c];
        if (slot >= 0) return slot;
        int best = head(c, avail);
        if (avail) {
            for (Mask s = c & nb[tail_v]; s;) {
                int v = lowest(s);
                s &= s - 1;
                int worst = 0;
                for (Mask d : components_of(nb, c & ~(Mask{1} << v)))
                    worst = std::max(worst, head(d, false));
                best = std::min(best, 1 + worst);
            }
        }
        slot = static_cast<std::int8_t>(std::min(best, kInf));
        return slot;
    }

    // Witness reconstruction mirrors the minimization, picking the smallest
    // vertex that achieves the memoized value.
    void build_head(Mask c, Vertex parent, bool avail, MatchedEliminationTree &out) {
        int want = head(c, avail);
        for (Mask s = c; s;) {
            int v = lowest(s);
            s &= s - 1;
            if (popcount(c) < 2) break;
            int worst = 0;
            auto comps = components_of(nb, c & ~(Mask{1} << v));
            for (Mask d : comps) worst = std::max(worst, tail(d, v, avail));
            if (1 + worst == want) {
                out.tree.parent[v] = parent;
                out.roles[v] = PathRole::Head;
                for (Mask d : comps) build_tail(d, v, avail, out);
                return;
            }
        }
        throw GraphError("internal: matched treedepth witness reconstruction failed");
    }

    void build_tail(Mask c, Vertex head_v, bool avail, MatchedEliminationTree &out) {
        int want = tail(c, head_v, avail);
        for (Mask s = c & nb[head_v]; s;) {
            int u = lowest(s);
            s &= s - 1;
            int worst = 0;
            auto comps = components_of(nb, c & ~(Mask{1} << u));
            for (Mask d : comps) worst = std::max(worst, after(d, u, avail));
            if (1 + worst == want) {
                out.tree.parent[u] = head_v;
                out.roles[u] = PathRole::Tail;
                for (Mask d : comps) build_after(d, u, avail, out);
                return;
            }
        }
        throw GraphError("internal: matched treedepth witness reconstruction failed");
    }

    void build_after(Mask c, Vertex tail_v, bool avail, MatchedEliminationTree &out) {
        int want = after(c, tail_v, avail);
        if (head(c, avail) == want) {
            // The component root continues with a fresh pair under tail_v.
            build_head(c, tail_v, avail, out);
            return;
        }
        for (Mask s = c & nb[tail_v]; s;) {
            int v = lowest(s);
            s &= s - 1;
            int worst = 0;
            auto comps = components_of(nb, c & ~(Mask{1} << v));
            for (Mask d : comps) worst = std::max(worst, head(d, false));
            if (1 + worst == want) {
                out.tree.parent[v] = tail_v;
                out.roles[v] = PathRole::Single;
                for (Mask d : comps) build_head(d, v, false, out);
                return;
            }
        }
        throw GraphError("internal: matched treedepth witness reconstruction failed");
    }
};

}  // namespace

MtdResult exact_mtd(const Graph &g) {
    check_pattern_input(g);
    const int n = g.vertex_count();
    if (n == 1) {
        MatchedEliminationTree w;
        w.tree.root = 0;
        w.tree.parent = {-1};
        w.roles = {PathRole::Head};
        return {1, std::move(w)};
    }
    MtdSolver solver(g);
    Mask all = (Mask{1} << n) - 1;
    int d = solver.head(all, true);
    if (d >= kInf) throw GraphError("internal: no matched elimination tree found");
    MatchedEliminationTree w;
    w.tree.parent.assign(n, -1);
    w.roles.assign(n, PathRole::Head);
    solver.build_head(all, -1, true, w);
    for (int v = 0; v < n; ++v)
        if (w.tree.parent[v] == -1) w.tree.root = v;
    return {d, std::move(w)};
}

std::optional<MtdResult> exact_mtd(const Graph &g, int depth_budget) {
    auto r = exact_mtd(g);
    if (r.depth > depth_budget) return std::nullopt;
    return r;
}

// ---------------------------------------------------------------------------
// lift_td_to_mtd
//
// Realizes the doubling bound mtd <= 2 td - 2: the top vertex pairs with a
// neighbor inside every component below it, and each remaining piece is
// rebuilt from a fresh minimum-depth elimination tree. A piece D hanging
// below the pair (r, u) satisfies td(D) <= depth(t) - 1, so the recursion
// depth telescopes to 2 depth(t) - 2.

namespace {

struct MtdLift {
    const Graph &g;
    std::vector<Mask> nb;
    MatchedEliminationTree out;

    explicit MtdLift(const Graph &graph) : g(graph), nb(neighbor_masks(graph)) {
        out.tree.parent.assign(g.vertex_count(), -1);
        out.roles.assign(g.vertex_count(), PathRole::Head);
    }

    Graph induced(Mask m, std::vector<Vertex> &verts) const {
        verts.clear();
        std::vector<int> idx(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((m >> v) & 1) {
                idx[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        std::vector<std::pair<Vertex, Vertex>> e;
        for (auto [u, v] : g.edges())
            if (idx[u] >= 0 && idx[v] >= 0) e.emplace_back(idx[u], idx[v]);
        return Graph::from_edges(static_cast<int>(verts.size()), e);
    }

    // Builds the matched tree for connected component `m`, hanging its head
    // under `parent` (-1 for the root). `root` fixes the head choice.
    void build(Mask m, Vertex root, Vertex parent) {
        out.tree.parent[root] = parent;
        out.roles[root] = PathRole::Head;
        for (Mask c : components_of(nb, m & ~(Mask{1} << root))) {
            Vertex u = -1;
            for (Mask s = c & nb[root]; s;) {
                u = lowest(s);
                break;
            }
            if (u < 0) throw GraphError("internal: component not adjacent to its root");
            out.tree.parent[u] = root;
            out.roles[u] = PathRole::Tail;
            for (Mask d : components_of(nb, c & ~(Mask{1} << u))) {
                if (popcount(d) == 1) {
                    Vertex w = lowest(d);
                    // The lone vertex must touch u: its component neighbors
                    // inside c are exactly u.
                    if (!((nb[u] >> w) & 1))
                        throw GraphError("internal: stranded vertex in lift");
                    out.tree.parent[w] = u;
                    out.roles[w] = PathRole::Single;
                } else {
                    std::vector<Vertex> verts;
                    Graph sub = induced(d, verts);
                    EliminationTree opt = exact_td_witness(sub);
                    build(d, verts[opt.root], u);
                }
            }
        }
    }
};

}  // namespace

MatchedEliminationTree lift_td_to_mtd(const Graph &g, const EliminationTree &t) {
    if (!verify_elim_tree(g, t)) throw GraphError("lift_td_to_mtd: invalid elimination tree");
    check_pattern_input(g);
    MtdLift lift(g);
    lift.build((Mask{1} << g.vertex_count()) - 1, t.root, -1);
    lift.out.tree.root = t.root;
    if (!verify_matched_elim_tree(g, lift.out))
        throw GraphError("internal: lift produced an unmatched tree");
    return std::move(lift.out);
}

// ---------------------------------------------------------------------------
// Tree decompositions

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto &b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool verify_td(const Graph &g, const TreeDecomposition &d) {
    const int n = g.vertex_count();
    const int b = static_cast<int>(d.bags.size());
    if (b == 0) return n == 0;
    // tree_edges must form a tree on the bags
    if (static_cast<int>(d.tree_edges.size()) != b - 1) return false;
    std::vector<std::vector<int>> adj(b);
    for (auto [x, y] : d.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b || x == y) return false;
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<char> seen(b, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                stack.push_back(y);
            }
    }
    if (cnt != b) return false;

    std::vector<std::vector<char>> in_bag(b, std::vector<char>(n, 0));
    for (int i = 0; i < b; ++i)
        for (Vertex v : d.bags[i]) {
            if (v < 0 || v >= n || in_bag[i][v]) return false;
            in_bag[i][v] = 1;
        }
    // connectivity of each vertex's bag set
    for (int v = 0; v < n; ++v) {
        int first = -1, total = 0;
        for (int i = 0; i < b; ++i)
            if (in_bag[i][v]) {
                ++total;
                if (first < 0) first = i;
            }
        if (total == 0) return false;
        std::vector<char> vis(b, 0);
        std::vector<int> st{first};
        vis[first] = 1;
        int reached = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj[x])
                if (!vis[y] && in_bag[y][v]) {
                    vis[y] = 1;
                    ++reached;
                    st.push_back(y);
                }
        }
        if (reached != total) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < b && !covered; ++i) covered = in_bag[i][u] && in_bag[i][v];
        if (!covered) return false;
    }
    return true;
}

bool verify_matched_td(const Graph &g, const MatchedTreeDecomposition &d) {
    if (!verify_td(g, d.td)) return false;
    if (d.matchings.size() != d.td.bags.size()) return false;
    for (std::size_t i = 0; i < d.td.bags.size(); ++i) {
        const auto &bag = d.td.bags[i];
        const auto &m = d.matchings[i];
        std::set<Vertex> in_bag(bag.begin(), bag.end());
        std::set<Vertex> covered;
        for (auto [u, v] : m) {
            if (!g.has_edge(u, v)) return false;
            if (!in_bag.count(u) || !in_bag.count(v)) return false;
            if (!covered.insert(u).second || !covered.insert(v).second) return false;
        }
        if (covered.size() + 1 < bag.size()) return false;
        if (covered.size() + 1 == bag.size()) {
            Vertex odd = -1;
            for (Vertex v : bag)
                if (!covered.count(v)) odd = v;
            bool attached = false;
            for (Vertex v : bag)
                if (v != odd && g.has_edge(odd, v)) attached = true;
            if (!attached) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Matched-bag machinery shared by the exact solvers

namespace {

struct BagTables {
    std::vector<char> perfect;   // indexed by vertex mask
    std::vector<char> matched;   // perfect or near-perfect with attachment

    BagTables(const Graph &g, const std::vector<Mask> &nb) {
        const std::size_t words = std::size_t{1} << g.vertex_count();
        perfect.assign(words, 0);
        matched.assign(words, 0);
        perfect[0] = 1;
        matched[0] = 1;
        for (Mask m = 1; m < words; ++m) {
            if (popcount(m) % 2) continue;
            int v = lowest(m);
            for (Mask s = nb[v] & m; s;) {
                int u = lowest(s);
                s &= s - 1;
                if (perfect[m & ~(Mask{1} << v) & ~(Mask{1} << u)]) {
                    perfect[m] = 1;
                    break;
                }
            }
        }
        for (Mask m = 1; m < words; ++m) {
            if (perfect[m]) {
                matched[m] = 1;
                continue;
            }
            if (popcount(m) % 2 == 0) continue;
            for (Mask s = m; s;) {
                int v = lowest(s);
                s &= s - 1;
                Mask rest = m & ~(Mask{1} << v);
                if (perfect[rest] && (nb[v] & rest)) {
                    matched[m] = 1;
                    break;
                }
            }
        }
    }

    std::vector<std::pair<Vertex, Vertex>> certificate(Mask m, const std::vector<Mask> &nb) const {
        std::vector<std::pair<Vertex, Vertex>> out;
        Mask work = m;
        if (!perfect[m]) {
            for (Mask s = m; s;) {
                int v = lowest(s);
                s &= s - 1;
                Mask rest = m & ~(Mask{1} << v);
                if (perfect[rest] && (nb[v] & rest)) {
                    work = rest;
                    break;
                }
            }
        }
        while (work) {
            int v = lowest(work);
            for (Mask s = nb[v] & work; s;) {
                int u = lowest(s);
                s &= s - 1;
                Mask rest = work & ~(Mask{1} << v) & ~(Mask{1} << u);
                if (perfect[rest]) {
                    out.emplace_back(v, u);
                    work = rest;
                    break;
                }
            }
        }
        return out;
    }
};

// Interface recursion for (matched) treewidth. State: the remaining
// component C plus the set X of parent-bag vertices that may be re-used for
// matching purposes. The next bag must contain the whole neighborhood of C,
// may take anything from X, and at least one vertex of C; subsets are tried
// in ascending mask order for determinism. Re-usable parent vertices matter:
// the optimal decomposition of a complete bipartite graph needs a bag vertex
// that is neither in the component nor adjacent to it.
struct TwSolver {
    const Graph &g;
    std::vector<Mask> nb;
    const BagTables *tables;  // null for plain treewidth
    int width;
    std::unordered_map<std::uint64_t, std::pair<char, Mask>> state;  // ok flag + chosen bag

    Mask hood(Mask c) const {
        Mask h = 0;
        for (Mask s = c; s;) {
            int v = lowest(s);
            s &= s - 1;
            h |= nb[v];
        }
        return h & ~c;
    }

    bool bag_ok(Mask b) const {
        if (popcount(b) > width + 1) return false;
        return tables ? tables->matched[b] != 0 : true;
    }

    static std::uint64_t key(Mask c, Mask x) {
        return (static_cast<std::uint64_t>(c) << 20) | x;
    }

    bool solve(Mask c, Mask x) {
        auto it = state.find(key(c, x));
        if (it != state.end()) return it->second.first;
        Mask n_c = hood(c);
        bool ok = false;
        Mask chosen = 0;
        if (popcount(n_c) <= width + 1) {
            int limit = width + 1 - popcount(n_c);
            Mask pool = c | (x & ~n_c);
            std::vector<Mask> subs;
            for (Mask sub = pool; sub; sub = (sub - 1) & pool) subs.push_back(sub);
            std::sort(subs.begin(), subs.end());
            for (Mask a : subs) {
                if (popcount(a) > limit || !(a & c)) continue;
                Mask b = n_c | a;
                if (!bag_ok(b)) continue;
                bool all = true;
                for (Mask d : components_of(nb, c & ~b))
                    if (!solve(d, b & ~hood(d))) {
                        all = false;
                        break;
                    }
                if (all) {
                    chosen = b;
                    ok = true;
                    break;
                }
            }
        }
        state[key(c, x)] = {ok ? 1 : 0, chosen};
        return ok;
    }

    int emit(Mask c, Mask x, int parent_bag, TreeDecomposition &td,
             std::vector<std::vector<std::pair<Vertex, Vertex>>> *matchings) {
        Mask b = state.at(key(c, x)).second;
        std::vector<Vertex> bag;
        for (Mask s = b; s;) {
            bag.push_back(static_cast<Vertex>(lowest(s)));
            s &= s - 1;
        }
        int id = static_cast<int>(td.bags.size());
        td.bags.push_back(bag);
        if (matchings) matchings->push_back(tables->certificate(b, nb));
        if (parent_bag >= 0) td.tree_edges.emplace_back(parent_bag, id);
        for (Mask d : components_of(nb, c & ~b)) emit(d, b & ~hood(d), id, td, matchings);
        return id;
    }
};

}  // namespace

std::optional<MtwResult> exact_mtw(const Graph &g, int width_budget) {
    check_pattern_input(g);
    const int n = g.vertex_count();
    if (n == 1) {
        // Degenerate by convention: a lone vertex gets a single one-vertex bag.
        MatchedTreeDecomposition d;
        d.td.bags = {{0}};
        d.matchings = {{}};
        return MtwResult{0, std::move(d)};
    }
    auto nb = neighbor_masks(g);
    BagTables tables(g, nb);
    for (int w = 1; w <= width_budget; ++w) {
        TwSolver solver{g, nb, &tables, w, {}};
        if (solver.solve((Mask{1} << n) - 1, 0)) {
            MatchedTreeDecomposition d;
            solver.emit((Mask{1} << n) - 1, 0, -1, d.td, &d.matchings);
            if (!verify_matched_td(g, d))
                throw GraphError("internal: matched treewidth witness failed verification");
            return MtwResult{w, std::move(d)};
        }
    }
    return std::nullopt;
}

MtwResult exact_mtw(const Graph &g) {
    auto r = exact_mtw(g, g.vertex_count());
    if (!r) throw GraphError("internal: no matched tree decomposition found");
    return std::move(*r);
}

std::optional<TreeDecomposition> exact_tw_witness(const Graph &g, int width_budget) {
    check_pattern_input(g);
    const int n = g.vertex_count();
    if (n == 1) {
        TreeDecomposition d;
        d.bags = {{0}};
        return d;
    }
    auto nb = neighbor_masks(g);
    for (int w = 1; w <= width_budget; ++w) {
        TwSolver solver{g, nb, nullptr, w, {}};
        if (solver.solve((Mask{1} << n) - 1, 0)) {
            TreeDecomposition d;
            solver.emit((Mask{1} << n) - 1, 0, -1, d, nullptr);
            if (!verify_td(g, d))
                throw GraphError("internal: treewidth witness failed verification");
            return d;
        }
    }
    return std::nullopt;
}

int exact_tw(const Graph &g) {
    auto w = exact_tw_witness(g, g.vertex_count());
    return w->width();
}

std::optional<MatchedTreeDecomposition> certify_matched(const Graph &g,
                                                        const TreeDecomposition &d) {
    if (!verify_td(g, d)) return std::nullopt;
    auto nb = neighbor_masks(g);
    BagTables tables(g, nb);
    MatchedTreeDecomposition out;
    out.td = d;
    for (const auto &bag : d.bags) {
        Mask m = 0;
        for (Vertex v : bag) m |= Mask{1} << v;
        if (!tables.matched[m]) return std::nullopt;
        out.matchings.push_back(tables.certificate(m, nb));
    }
    return out;
}

// ---------------------------------------------------------------------------
// lift_tw_to_mtw (top-down doubling construction)

MatchedTreeDecomposition lift_tw_to_mtw(const Graph &g, const TreeDecomposition &d) {
    if (!verify_td(g, d)) throw GraphError("lift_tw_to_mtw: invalid tree decomposition");
    if (g.edge_count() == 0) throw GraphError("lift_tw_to_mtw: edgeless graph cannot be matched");

    std::vector<std::set<Vertex>> bags;
    for (const auto &b : d.bags) bags.emplace_back(b.begin(), b.end());
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [x, y] : d.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<int> parent(bags.size(), -1), order;
    {
        std::vector<char> seen(bags.size(), 0);
        std::vector<int> st{0};
        seen[0] = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            order.push_back(x);
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    parent[y] = x;
                    st.push_back(y);
                }
        }
    }

    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings(bags.size());
    std::vector<std::pair<std::vector<Vertex>, std::vector<std::pair<Vertex, Vertex>>>> leaves;
    std::vector<int> leaf_parent;

    auto subtree_of = [&](int b) {
        std::vector<int> out{b};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int y : adj[out[i]])
                if (parent[y] == out[i]) out.push_back(y);
        return out;
    };

    // Maximum matching of G[bag], lowest-vertex-first reconstruction.
    auto max_matching = [&](const std::set<Vertex> &bag) {
        std::vector<Vertex> verts(bag.begin(), bag.end());
        const int s = static_cast<int>(verts.size());
        std::vector<int> best(std::size_t{1} << s, -1);
        std::function<int(std::uint32_t)> size_of = [&](std::uint32_t mask) -> int {
            if (!mask) return 0;
            if (best[mask] >= 0) return best[mask];
            int v = __builtin_ctz(mask);
            int r = size_of(mask & ~(1u << v));  // v stays unmatched
            for (int u = v + 1; u < s; ++u)
                if (((mask >> u) & 1) && g.has_edge(verts[v], verts[u]))
                    r = std::max(r, 1 + size_of(mask & ~(1u << v) & ~(1u << u)));
            return best[mask] = r;
        };
        std::vector<std::pair<Vertex, Vertex>> m;
        std::uint32_t mask = (std::uint32_t{1} << s) - 1;
        while (mask) {
            int v = __builtin_ctz(mask);
            std::uint32_t rest = mask & ~(1u << v);
            if (size_of(mask) == size_of(rest)) {
                mask = rest;
                continue;
            }
            for (int u = v + 1; u < s; ++u) {
                if (((mask >> u) & 1) && g.has_edge(verts[v], verts[u]) &&
                    size_of(mask) == 1 + size_of(rest & ~(1u << u))) {
                    m.emplace_back(verts[v], verts[u]);
                    mask = rest & ~(1u << u);
                    break;
                }
            }
        }
        return m;
    };

    for (int b : order) {
        std::set<Vertex> &bag = bags[b];
        auto m = max_matching(bag);
        std::set<Vertex> covered;
        for (auto [u, v] : m) {
            covered.insert(u);
            covered.insert(v);
        }
        std::map<Vertex, Vertex> parent_partner;
        if (parent[b] >= 0)
            for (auto [u, v] : matchings[parent[b]]) {
                parent_partner[u] = v;
                parent_partner[v] = u;
            }

        for (;;) {
            Vertex v = -1;
            for (Vertex w : bag)
                if (!covered.count(w)) {
                    v = w;
                    break;
                }
            if (v < 0) break;
            // An unmatched in-bag neighbor pairs up directly.
            Vertex mate = -1;
            for (Vertex u : g.neighbors(v))
                if (bag.count(u) && !covered.count(u)) {
                    mate = u;
                    break;
                }
            if (mate >= 0) {
                m.emplace_back(v, mate);
                covered.insert(v);
                covered.insert(mate);
                continue;
            }
            if (auto it = parent_partner.find(v);
                it != parent_partner.end() && parent[b] >= 0 && bags[parent[b]].count(v)) {
                // Re-use the partner the parent bag matched v with.
                Vertex u = it->second;
                bag.insert(u);
                m.emplace_back(v, u);
                covered.insert(v);
                covered.insert(u);
                continue;
            }
            bool internal = true;
            for (Vertex u : g.neighbors(v))
                if (!bag.count(u)) internal = false;
            if (internal) {
                // Every neighbor of v is matched here; v moves to a private
                // leaf bag that copies the current matching.
                for (int sb : subtree_of(b)) bags[sb].erase(v);
                std::vector<Vertex> leaf{v};
                for (auto [a, c] : m) {
                    leaf.push_back(a);
                    leaf.push_back(c);
                }
                std::sort(leaf.begin(), leaf.end());
                leaf.erase(std::unique(leaf.begin(), leaf.end()), leaf.end());
                leaves.emplace_back(leaf, m);
                leaf_parent.push_back(b);
                continue;
            }
            // Nearest outside neighbor joins this bag along the tree path.
            std::vector<int> dist(bags.size(), -1), from(bags.size(), -1);
            std::vector<int> queue{b};
            dist[b] = 0;
            Vertex partner = -1;
            int partner_bag = -1;
            for (std::size_t qi = 0; qi < queue.size() && partner < 0; ++qi) {
                int x = queue[qi];
                for (Vertex u : g.neighbors(v)) {
                    if (!bag.count(u) && bags[x].count(u)) {
                        if (partner < 0 || u < partner) {
                            partner = u;
                            partner_bag = x;
                        }
                    }
                }
                if (partner >= 0) break;
                for (int y : adj[x])
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        from[y] = x;
                        queue.push_back(y);
                    }
            }
            if (partner < 0)
                throw GraphError("internal: lift_tw_to_mtw found no outside partner");
            for (int x = partner_bag; x != b; x = from[x]) bags[x].insert(partner);
            bag.insert(partner);
            m.emplace_back(v, partner);
            covered.insert(v);
            covered.insert(partner);
        }
        matchings[b] = std::move(m);
    }

    MatchedTreeDecomposition out;
    std::vector<int> new_id(bags.size(), -1);
    for (std::size_t b = 0; b < bags.size(); ++b) {
        if (bags[b].empty()) continue;  // fully drained bag; skip
        new_id[b] = static_cast<int>(out.td.bags.size());
        out.td.bags.emplace_back(bags[b].begin(), bags[b].end());
        out.matchings.push_back(matchings[b]);
    }
    for (std::size_t b = 0; b < bags.size(); ++b) {
        if (new_id[b] < 0 || parent[b] < 0) continue;
        int p = parent[b];
        while (p >= 0 && new_id[p] < 0) p = parent[p];
        if (p >= 0) out.td.tree_edges.emplace_back(new_id[p], new_id[b]);
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        int p = leaf_parent[i];
        while (p >= 0 && new_id[p] < 0) p = parent[p];
        int id = static_cast<int>(out.td.bags.size());
        out.td.bags.push_back(leaves[i].first);
        out.matchings.push_back(leaves[i].second);
        if (p >= 0) out.td.tree_edges.emplace_back(new_id[p], id);
    }
    if (!verify_matched_td(g, out)) {
        std::ostringstream dump;
        dump << "internal: lift_tw_to_mtw output failed verification;";
        for (std::size_t i = 0; i < out.td.bags.size(); ++i) {
            dump << " bag" << i << "={";
            for (Vertex v : out.td.bags[i]) dump << v << ',';
            dump << "} m=";
            for (auto [u, v] : out.matchings[i]) dump << u << '-' << v << ',';
        }
        for (auto [x, y] : out.td.tree_edges) dump << " link " << x << '-' << y;
        throw GraphError(dump.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural predicates

namespace {

Graph delete_vertex(const Graph &g, Vertex v) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        e.emplace_back(a - (a > v), b - (b > v));
    }
    return Graph::from_edges(g.vertex_count() - 1, e);
}

Graph contract_edge(const Graph &g, Vertex u, Vertex v) {
    // v merges into u, then v's slot is removed
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [a, b] : g.edges()) {
        Vertex x = (a == v) ? u : a;
        Vertex y = (b == v) ? u : b;
        if (x == y) continue;
        x -= (x > v);
        y -= (y > v);
        e.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph::from_edges(g.vertex_count() - 1, e);
}

struct InducedMinorSearch {
    CanonicalForm target;
    int tn, te;
    std::unordered_map<CanonicalForm, bool, CanonicalFormHash> memo;

    bool run(const Graph &h) {
        if (h.vertex_count() < tn || h.edge_count() < te) return false;
        auto comps = h.component_masks();
        if (comps.size() > 1) {
            // A connected pattern lives inside one component.
            for (Mask comp : comps) {
                std::vector<int> keep;
                for (int v = 0; v < h.vertex_count(); ++v)
                    if ((comp >> v) & 1) keep.push_back(v);
                if (static_cast<int>(keep.size()) < tn) continue;
                std::vector<int> idx(h.vertex_count(), -1);
                for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
                std::vector<std::pair<Vertex, Vertex>> e;
                for (auto [a, b] : h.edges())
                    if (idx[a] >= 0 && idx[b] >= 0) e.emplace_back(idx[a], idx[b]);
                if (run(Graph::from_edges(static_cast<int>(keep.size()), e))) return true;
            }
            return false;
        }
        auto key = canonical_form(h);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool found = false;
        if (h.vertex_count() == tn) {
            found = (key == target);
        } else {
            for (auto [u, v] : h.edges())
                if (run(contract_edge(h, u, v))) {
                    found = true;
                    break;
                }
            if (!found)
                for (int v = 0; v < h.vertex_count() && !found; ++v)
                    found = run(delete_vertex(h, v));
        }
        memo[key] = found;
        return found;
    }
};

}  // namespace

bool is_induced_minor(const Graph &pattern, const Graph &g) {
    require_small(g);
    require_small(pattern);
    if (!pattern.is_connected()) throw GraphError("is_induced_minor: pattern must be connected");
    InducedMinorSearch search{canonical_form(pattern), pattern.vertex_count(),
                              pattern.edge_count(), {}};
    return search.run(g);
}

bool has_induced(const Graph &pattern, const Graph &g) {
    require_small(g);
    const int k = pattern.vertex_count();
    if (k > g.vertex_count()) return false;
    auto target = canonical_form(pattern);
    std::vector<Vertex> subset(k);
    bool found = false;
    std::function<void(int, int)> rec = [&](int next, int depth) {
        if (found) return;
        if (depth == k) {
            std::vector<std::pair<Vertex, Vertex>> e;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (g.has_edge(subset[i], subset[j])) e.emplace_back(i, j);
            if (static_cast<int>(e.size()) == pattern.edge_count() &&
                canonical_form(Graph::from_edges(k, e)) == target)
                found = true;
            return;
        }
        for (int v = next; v <= g.vertex_count() - (k - depth); ++v) {
            subset[depth] = v;
            rec(v + 1, depth + 1);
            if (found) return;
        }
    };
    rec(0, 0);
    return found;
}

bool forbidden_mtd3_free(const Graph &g) {
    require_small(g);
    return !has_induced(make_cycle(4), g) && !has_induced(make_path(6), g) &&
           !has_induced(make_t33(), g);
}

}  // namespace sparsehom
