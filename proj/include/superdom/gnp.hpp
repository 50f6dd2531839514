#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// Erdos-Renyi G(n, p) from a named 64-bit seed. Edge decisions use an
// explicit threshold on raw mt19937_64 output, so the graph for a given
// (n, p, seed) triple is identical on every platform.
inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0,1]");
    std::mt19937_64 rng(seed);
    const std::uint64_t kOne = std::uint64_t{1} << 53;
    const std::uint64_t threshold =
        p >= 1.0 ? kOne : static_cast<std::uint64_t>(p * 9007199254740992.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace superdom
