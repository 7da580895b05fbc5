#pragma once

#include <cstdint>

#include "sparsehom/graph.hpp"

namespace sparsehom {

/// splitmix64; used instead of <random> distributions so that seeded runs
/// are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift rejection.
        for (;;) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0ull - bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    bool chance(double p) { return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0); }

private:
    std::uint64_t state_;
};

/// Erdos-Renyi G(n, p).
Graph random_graph_gnp(int n, double p, Rng &rng);

/// Uniform graph with exactly m distinct edges.
Graph random_graph_gnm(int n, int m, Rng &rng);

/// Host containing a planted copy of `pattern` plus noise edges.
Graph planted_host(const Graph &pattern, int extra_vertices, int noise_edges, Rng &rng);

/// Random relabeling of g.
Graph random_relabel(const Graph &g, Rng &rng);

}  // namespace sparsehom
