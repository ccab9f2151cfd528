#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"

namespace ctkit {

// Resamples allowed before random_connected_graph gives up.
inline constexpr int kResampleBudget = 10000;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return build_graph(n, es);
}

// Erdos-Renyi G(n,p) conditioned on connectivity by rejection.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidInput, "p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    throw Error(Errc::GiveUp, "no connected sample after " + std::to_string(kResampleBudget) + " attempts");
}

} // namespace ctkit
