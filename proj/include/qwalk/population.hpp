#pragma once

// Reproducible graph populations for identity sweeps.
//
// Sampling: std::mt19937_64 seeded with the caller's seed. For each graph,
// n = n_min + (draw mod (n_max - n_min + 1)); then every pair (i, j), i < j,
// in column-major order is an edge iff the top bit of the next draw is set.
// Only raw engine output is used, so results are identical across platforms.

#include "qwalk/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// All 2^(n(n-1)/2) labeled graphs on n vertices, by edge-subset bitmask.
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
    if (n > 7) throw std::invalid_argument("all_labeled_graphs: n > 7 is too large");
    std::vector<Edge> pairs;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j});
    std::vector<Graph> out;
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1u) edges.push_back(pairs[b]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

/// All labeled graphs on 1..max_n vertices.
inline std::vector<Graph> all_graphs_up_to(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto level = all_labeled_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<Graph> sample_graphs(std::uint64_t seed, std::size_t count, std::size_t n_min, std::size_t n_max) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("sample_graphs: bad vertex range");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t n = n_min + static_cast<std::size_t>(rng() % (n_max - n_min + 1));
        std::vector<Edge> edges;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (rng() >> 63u) edges.push_back({i, j});
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

/// Small regular graphs: K_n (n <= 6), C_n (3 <= n <= 8), K_{m,m} (m <= 3),
/// edgeless graphs and perfect matchings.
inline std::vector<NamedGraph> regular_catalog() {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back({"K" + std::to_string(n), generators::complete(n)});
    for (std::size_t n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), generators::cycle(n)});
    for (std::size_t m = 1; m <= 3; ++m)
        out.push_back({"K" + std::to_string(m) + "," + std::to_string(m), generators::complete_multipartite({m, m})});
    for (std::size_t n = 2; n <= 4; ++n) out.push_back({std::to_string(n) + "K1", generators::empty(n)});
    out.push_back({"2K2", disjoint_union(generators::complete(2), generators::complete(2))});
    out.push_back({"3K2", disjoint_union(generators::complete(2), disjoint_union(generators::complete(2),
                                                                                  generators::complete(2)))});
    return out;
}

/// Every ordered list of positive part sizes with total <= max_total.
inline std::vector<std::vector<std::size_t>> part_lists(std::size_t max_total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (!current.empty()) out.push_back(current);
        for (std::size_t p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, max_total);
    return out;
}

}  // namespace qwalk
