#include "sparsehom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sparsehom {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>> &edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto &a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw GraphError("duplicate edge rejected");
    }
    g.m_ = static_cast<int>(edges.size());
    if (n <= 64) {
        g.mask_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (Vertex u : g.adj_[v]) g.mask_[v] |= std::uint64_t{1} << u;
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!mask_.empty()) return (mask_[u] >> v) & 1;
    const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

std::vector<std::uint64_t> Graph::component_masks() const {
    if (n_ > 64) throw GraphError("component_masks requires <= 64 vertices");
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint64_t comp = 0;
        std::vector<Vertex> stack{s};
        comp |= std::uint64_t{1} << s;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : adj_[v])
                if (!((comp >> u) & 1)) {
                    comp |= std::uint64_t{1} << u;
                    stack.push_back(u);
                }
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

// ---------------------------------------------------------------------------
// Edge-list text format

LoadedGraph load_edge_list(std::istream &in) {
    std::string line;
    int lineno = 0;
    std::map<long long, int> dense;
    std::vector<long long> original;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<long long, long long>> seen_raw;

    auto densify = [&](long long id) {
        auto it = dense.find(id);
        if (it != dense.end()) return it->second;
        int v = static_cast<int>(original.size());
        dense.emplace(id, v);
        original.push_back(id);
        return v;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        long long a, b;
        if (!(ss >> a)) continue;  // blank or comment-only line
        std::string rest;
        if (!(ss >> b) || (ss >> rest)) {
            throw GraphError("line " + std::to_string(lineno) + ": expected two vertex ids");
        }
        if (a < 0 || b < 0)
            throw GraphError("line " + std::to_string(lineno) + ": negative vertex id");
        if (a == b)
            throw GraphError("line " + std::to_string(lineno) + ": self-loop rejected");
        Vertex u = densify(a), v = densify(b);
        edges.emplace_back(u, v);
    }
    // Duplicate detection happens in from_edges, but we want line numbers.
    std::map<std::pair<Vertex, Vertex>, int> first_line;
    int i = 0;
    for (auto [u, v] : edges) {
        ++i;
        auto key = std::minmax(u, v);
        if (!first_line.emplace(std::pair<Vertex, Vertex>(key.first, key.second), i).second)
            throw GraphError("duplicate edge (possibly reversed) in input");
    }
    LoadedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(original.size()), edges);
    out.original_ids = std::move(original);
    return out;
}

LoadedGraph load_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open edge list file: " + path);
    return load_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g,
                     const std::vector<long long> *original_ids) {
    for (auto [u, v] : g.edges()) {
        long long a = original_ids ? (*original_ids)[u] : u;
        long long b = original_ids ? (*original_ids)[v] : v;
        out << a << ' ' << b << '\n';
    }
}

// ---------------------------------------------------------------------------
// Named patterns

Graph make_path(int k) {
    if (k < 1) throw GraphError("path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, e);
}

Graph make_cycle(int k) {
    if (k < 3) throw GraphError("cycle needs at least three vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(k - 1, 0);
    return Graph::from_edges(k, e);
}

Graph make_clique(int k) {
    if (k < 1) throw GraphError("clique needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edges(k, e);
}

Graph make_star(int leaves) {
    if (leaves < 1) throw GraphError("star needs at least one leaf");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph make_complement_path(int k) {
    if (k < 1) throw GraphError("complement-path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edges(k, e);
}

Graph make_biclique(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("biclique sides must be positive");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

// The 9-vertex, 12-edge graph X: a 6-cycle 0..5 where each of the vertex
// pairs {0,2}, {2,4}, {4,0} gets a second common neighbor (6, 7, 8).
Graph make_x() {
    return Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                 {0, 6}, {6, 2}, {2, 7}, {7, 4}, {4, 8}, {8, 0}});
}

// Partial 2-tree with matched treewidth 5; see make_z for a supergraph that
// drops back to 4. Branch vertices 0, 1, 2; the pair {0,2} is joined by two
// paths with two interior vertices each, the other pairs by two common
// neighbors each.
Graph make_y() {
    return Graph::from_edges(11, {{0, 3}, {3, 4}, {4, 2},   // 0 - 3 - 4 - 2
                                  {0, 5}, {5, 6}, {6, 2},   // 0 - 5 - 6 - 2
                                  {0, 7}, {7, 1}, {0, 8}, {8, 1},
                                  {1, 9}, {9, 2}, {1, 10}, {10, 2}});
}

// Y plus a twelfth vertex adjacent to the interior of both long paths.
Graph make_z() {
    auto e = make_y().edges();
    e.insert(e.end(), {{3, 11}, {11, 5}});
    return Graph::from_edges(12, e);
}

// (3,3) tadpole: a triangle with a three-vertex tail.
Graph make_t33() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
}

Graph make_k4_minus_e() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph make_petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, e);
}

PatternName parse_pattern_name(const std::string &text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    auto split = [](const std::string &s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        parts.push_back(cur);
        return parts;
    };
    auto num = [&](const std::string &s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw GraphError("bad size parameter in pattern name: " + text);
        return std::stoi(s);
    };

    auto parts = split(t);
    const std::string &head = parts[0];
    if (parts.size() == 1) {
        if (head == "x") return {PatternFamily::NamedX};
        if (head == "y") return {PatternFamily::NamedY};
        if (head == "z") return {PatternFamily::NamedZ};
        if (head == "t33") return {PatternFamily::NamedT33};
        if (head == "k4-e") return {PatternFamily::NamedK4MinusE};
        // shorthands like c6, p5, k4
        if (head.size() >= 2 && (head[0] == 'c' || head[0] == 'p' || head[0] == 'k') &&
            std::isdigit(static_cast<unsigned char>(head[1]))) {
            int k = num(head.substr(1));
            if (head[0] == 'c') return {PatternFamily::Cycle, k};
            if (head[0] == 'p') return {PatternFamily::Path, k};
            return {PatternFamily::Clique, k};
        }
        throw GraphError("unknown pattern name: " + text);
    }
    if (head == "named" && parts.size() == 2) return parse_pattern_name(parts[1]);
    if (parts.size() == 2) {
        if (head == "path") return {PatternFamily::Path, num(parts[1])};
        if (head == "cycle") return {PatternFamily::Cycle, num(parts[1])};
        if (head == "clique") return {PatternFamily::Clique, num(parts[1])};
        if (head == "star") return {PatternFamily::Star, num(parts[1])};
        if (head == "complement-path" || head == "pbar")
            return {PatternFamily::ComplementPath, num(parts[1])};
    }
    if (parts.size() == 3 && head == "biclique")
        return {PatternFamily::Biclique, num(parts[1]), num(parts[2])};
    throw GraphError("unknown pattern name: " + text);
}

Graph make_pattern(const PatternName &name) {
    switch (name.family) {
        case PatternFamily::Path: return make_path(name.a);
        case PatternFamily::Cycle: return make_cycle(name.a);
        case PatternFamily::Clique: return make_clique(name.a);
        case PatternFamily::Star: return make_star(name.a);
        case PatternFamily::ComplementPath: return make_complement_path(name.a);
        case PatternFamily::Biclique: return make_biclique(name.a, name.b);
        case PatternFamily::NamedX: return make_x();
        case PatternFamily::NamedY: return make_y();
        case PatternFamily::NamedZ: return make_z();
        case PatternFamily::NamedT33: return make_t33();
        case PatternFamily::NamedK4MinusE: return make_k4_minus_e();
    }
    throw GraphError("unreachable pattern family");
}

Graph make_pattern(const std::string &text) { return make_pattern(parse_pattern_name(text)); }

// ---------------------------------------------------------------------------
// Canonicalization and automorphisms
//
// Color refinement plus individualization search. All callers are guarded
// at 12 vertices, where this terminates quickly; cliques (the refinement
// worst case) never exceed 6 vertices in this code base.

namespace {

using Colors = std::vector<int>;

Colors refine_colors(const Graph &g, Colors colors) {
    const int n = g.vertex_count();
    auto class_count = [&](const Colors &c) {
        Colors sorted = c;
        std::sort(sorted.begin(), sorted.end());
        return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    };
    auto classes = class_count(colors);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v) + 1);
            for (Vertex u : g.neighbors(v)) nb.push_back(colors[u]);
            std::sort(nb.begin(), nb.end());
            nb.push_back(colors[v]);
            sig[v] = {std::move(nb), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        Colors next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            next[order[i]] = c;
        }
        // Each pass refines the partition (equal signature implies equal old
        // color), so a stable class count means a stable partition.
        if (c + 1 == classes) return next;
        classes = c + 1;
        colors = std::move(next);
    }
}

// Adjacency encoded as the row-major upper triangle under a labeling.
std::vector<char> adjacency_code(const Graph &g, const std::vector<int> &label_of) {
    const int n = g.vertex_count();
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[label_of[v]] = v;
    std::vector<char> code;
    code.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code.push_back(g.has_edge(vertex_at[i], vertex_at[j]) ? 1 : 0);
    return code;
}

struct CanonSearch {
    const Graph &g;
    std::vector<char> best_code;
    std::vector<int> best_label;
    bool have_best = false;

    void run(const Colors &colors) {
        const int n = g.vertex_count();
        // Split cells; find the first non-singleton one.
        int target_color = -1;
        std::vector<int> cell;
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[colors[v]];
        for (int c = 0; c < n; ++c) {
            if (count[c] > 1) {
                target_color = c;
                break;
            }
        }
        if (target_color < 0) {
            std::vector<int> label(n);
            for (int v = 0; v < n; ++v) label[v] = colors[v];
            auto code = adjacency_code(g, label);
            if (!have_best || code < best_code) {
                best_code = std::move(code);
                best_label = std::move(label);
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (colors[v] == target_color) cell.push_back(v);
        for (int v : cell) {
            Colors split = colors;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (split[u] >= target_color && u != v) ++split[u];
            split[v] = target_color;
            run(refine_colors(g, std::move(split)));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph &g) {
    require_small(g);
    const int n = g.vertex_count();
    if (n == 0) return {};
    CanonSearch search{g};
    search.run(refine_colors(g, Colors(n, 0)));
    return search.best_label;
}

CanonicalForm canonical_form(const Graph &g) {
    auto label = canonical_labeling(g);
    CanonicalForm f;
    f.n = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        auto e = std::minmax(label[u], label[v]);
        f.edges.emplace_back(e.first, e.second);
    }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

std::string CanonicalForm::to_string() const {
    std::ostringstream ss;
    ss << 'n' << n;
    for (auto [u, v] : edges) ss << ' ' << u << '-' << v;
    return ss.str();
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm &f) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.n));
    for (auto [u, v] : f.edges) mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
    return static_cast<std::size_t>(h);
}

namespace {

void automorphism_search(const Graph &g, const Colors &colors, std::vector<int> &image,
                         std::vector<char> &used, int v,
                         const std::function<void(const std::vector<int> &)> &emit) {
    const int n = g.vertex_count();
    if (v == n) {
        emit(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || colors[w] != colors[v]) continue;
        bool ok = true;
        for (int p = 0; p < v && ok; ++p)
            if (g.has_edge(p, v) != g.has_edge(image[p], w)) ok = false;
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        automorphism_search(g, colors, image, used, v + 1, emit);
        used[w] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph &g) {
    require_small(g);
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (n == 0) return {{}};
    Colors colors = refine_colors(g, Colors(n, 0));
    std::vector<int> image(n);
    std::vector<char> used(n, 0);
    automorphism_search(g, colors, image, used, 0,
                        [&](const std::vector<int> &perm) { out.push_back(perm); });
    return out;
}

std::uint64_t automorphism_count(const Graph &g) {
    return static_cast<std::uint64_t>(automorphisms(g).size());
}

Graph relabel(const Graph &g, const std::vector<int> &perm) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), e);
}

Graph quotient(const Graph &g, const std::vector<int> &block_of, int block_count) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : g.edges()) {
        int a = block_of[u], b = block_of[v];
        if (a == b) throw GraphError("quotient would create a loop");
        e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph::from_edges(block_count, e);
}

}  // namespace sparsehom
