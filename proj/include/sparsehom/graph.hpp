#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sparsehom {

using Vertex = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph. Doubles as pattern and host.
/// Vertices are 0..n-1, neighbor lists are strictly increasing.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops, duplicates and
    /// out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>> &edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const;

    /// Neighborhood as a bitmask; only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const { return mask_[v]; }
    bool has_masks() const { return n_ <= 64; }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_connected() const;

    /// Connected component masks (only for n <= 64).
    std::vector<std::uint64_t> component_masks() const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> mask_;  // empty when n_ > 64
};

/// Result of parsing an edge-list file: ids densified to 0..n-1 in first
/// appearance order, original labels kept for output.
struct LoadedGraph {
    Graph graph;
    std::vector<long long> original_ids;
};

/// Edge-list format: one "u v" per line, '#' comments and blank lines
/// ignored, whitespace-separated decimal ids. Loops and duplicate edges
/// are errors (reported with their line number).
LoadedGraph load_edge_list(std::istream &in);
LoadedGraph load_edge_list_file(const std::string &path);
void write_edge_list(std::ostream &out, const Graph &g,
                     const std::vector<long long> *original_ids = nullptr);

// ---------------------------------------------------------------------------
// Named patterns

enum class PatternFamily {
    Path,
    Cycle,
    Clique,
    Star,
    ComplementPath,
    Biclique,
    NamedX,
    NamedY,
    NamedZ,
    NamedT33,
    NamedK4MinusE,
};

struct PatternName {
    PatternFamily family;
    int a = 0;  // size parameter (paths/cycles/cliques/stars), or first side
    int b = 0;  // second side for bicliques
};

/// Parses strings like "path:5", "cycle:4", "clique:4", "star:3",
/// "complement-path:6" (alias "pbar:6"), "biclique:3:3", "x", "y", "z",
/// "t33", "k4-e", and "c6"/"p5"-style shorthands.
PatternName parse_pattern_name(const std::string &text);

Graph make_pattern(const PatternName &name);
Graph make_pattern(const std::string &text);

Graph make_path(int k);
Graph make_cycle(int k);
Graph make_clique(int k);
Graph make_star(int leaves);
Graph make_complement_path(int k);
Graph make_biclique(int a, int b);
Graph make_x();
Graph make_y();
Graph make_z();
Graph make_t33();
Graph make_k4_minus_e();
Graph make_petersen();

// ---------------------------------------------------------------------------
// Isomorphism machinery (small graphs only; guarded at 12 vertices)

struct CanonicalForm {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;  // under the canonical labeling

    bool operator==(const CanonicalForm &o) const { return n == o.n && edges == o.edges; }
    bool operator<(const CanonicalForm &o) const {
        return n != o.n ? n < o.n : edges < o.edges;
    }
    std::string to_string() const;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm &f) const;
};

/// Isomorphism-invariant relabeling. Two graphs of <= 12 vertices have
/// equal canonical forms iff they are isomorphic.
CanonicalForm canonical_form(const Graph &g);

/// The permutation realizing canonical_form (canonical label of vertex v is
/// perm[v]).
std::vector<int> canonical_labeling(const Graph &g);

std::uint64_t automorphism_count(const Graph &g);
std::vector<std::vector<int>> automorphisms(const Graph &g);

Graph relabel(const Graph &g, const std::vector<int> &perm);

/// Quotient of g by the given partition (block id per vertex). Merging
/// adjacent vertices produces a loop, which is rejected.
Graph quotient(const Graph &g, const std::vector<int> &block_of, int block_count);

inline void require_small(const Graph &g, int limit = 12) {
    if (g.vertex_count() > limit)
        throw GraphError("graph exceeds the " + std::to_string(limit) +
                         "-vertex engine guard");
}

}  // namespace sparsehom
