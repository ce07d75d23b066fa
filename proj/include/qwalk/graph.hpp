#pragma once

/**
 * @file graph.hpp
 * @brief Simple undirected graphs, their text encodings, standard families,
 * and the structural operations (complement, union, join, corona, edge corona).
 *
 * A Graph is immutable once built. Edges are stored as sorted pairs (u, v)
 * with u < v; vertices are 0-indexed.
 */

#include "qwalk/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

struct Edge {
    std::size_t u;
    std::size_t v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;

    // Validating constructor: rejects loops, out-of-range endpoints and duplicates.
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            if (e.u == e.v) throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
            if (e.u >= n_ || e.v >= n_)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") out of range for n=" + std::to_string(n_));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) + ")");
        degrees_.assign(n_, 0);
        for (const auto& e : edges_) {
            ++degrees_[e.u];
            ++degrees_[e.v];
        }
    }

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t degree(std::size_t v) const { return degrees_.at(v); }
    const std::vector<std::size_t>& degrees() const { return degrees_; }

    std::size_t max_degree() const {
        return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    // the common degree if every vertex has the same degree
    std::optional<std::size_t> regular_degree() const {
        if (n_ == 0) return std::nullopt;
        if (std::all_of(degrees_.begin(), degrees_.end(), [&](std::size_t d) { return d == degrees_[0]; }))
            return degrees_[0];
        return std::nullopt;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> degrees_;
};

inline Graph build_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return {n, std::move(edges)};
}

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62)
// ---------------------------------------------------------------------------

inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == '~') throw std::invalid_argument("graph6: long form (n > 62) is not supported");
    if (first < 63 || first > 125) throw std::invalid_argument("graph6: malformed header byte");
    const std::size_t n = first - 63u;
    const std::size_t nbits = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (text.size() != 1 + nchars)
        throw std::invalid_argument("graph6: expected " + std::to_string(1 + nchars) + " characters for n=" +
                                    std::to_string(n) + ", got " + std::to_string(text.size()));
    std::vector<bool> bits;
    bits.reserve(nchars * 6);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        const unsigned value = c - 63u;
        for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1u) != 0);
    }
    for (std::size_t i = nbits; i < bits.size(); ++i)
        if (bits[i]) throw std::invalid_argument("graph6: nonzero padding bits");
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (bits[k]) edges.push_back({i, j});
    return {n, std::move(edges)};
}

inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: long form (n > 62) is not supported");
    std::string out(1, static_cast<char>(63 + n));
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1u) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

// ---------------------------------------------------------------------------
// edge-list text: first line n, then one "u v" pair per line
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::istream& in) {
    long long n = -1;
    if (!(in >> n) || n < 0) throw std::invalid_argument("edge list: missing or invalid vertex count");
    std::vector<Edge> edges;
    long long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative endpoint");
        edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
    }
    if (!in.eof()) throw std::invalid_argument("edge list: non-numeric token");
    return {static_cast<std::size_t>(n), std::move(edges)};
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

namespace generators {

inline void require_positive(std::size_t n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one vertex");
}

inline Graph empty(std::size_t n) {
    require_positive(n, "empty");
    return {n, {}};
}

inline Graph complete(std::size_t n) {
    require_positive(n, "complete");
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) edges.push_back({i, j});
    return {n, std::move(edges)};
}

inline Graph path(std::size_t n) {
    require_positive(n, "path");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return {n, std::move(edges)};
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return {n, std::move(edges)};
}

// vertex 0 is the centre
inline Graph star(std::size_t n) {
    require_positive(n, "star");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
    return {n, std::move(edges)};
}

// parts occupy consecutive vertex blocks
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    std::vector<std::size_t> block;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
        block.insert(block.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < block.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (block[i] != block[j]) edges.push_back({i, j});
    return {block.size(), std::move(edges)};
}

}  // namespace generators

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < g.order(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!g.has_edge(i, j)) edges.push_back({i, j});
    return {g.order(), std::move(edges)};
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const std::size_t off = a.order();
    for (const auto& e : b.edges()) edges.push_back({e.u + off, e.v + off});
    return {a.order() + b.order(), std::move(edges)};
}

inline Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = disjoint_union(a, b).edges();
    const std::size_t off = a.order();
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j) edges.push_back({i, off + j});
    return {a.order() + b.order(), std::move(edges)};
}

// G1 first, then copy i of G2 (attached to vertex i) at offset n1 + i*n2
inline Graph corona(const Graph& g1, const Graph& g2) {
    if (g1.order() < 1 || g2.order() < 1) throw std::invalid_argument("corona: both graphs need vertices");
    const std::size_t n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> edges = g1.edges();
    for (std::size_t i = 0; i < n1; ++i) {
        const std::size_t off = n1 + i * n2;
        for (const auto& e : g2.edges()) edges.push_back({off + e.u, off + e.v});
        for (std::size_t j = 0; j < n2; ++j) edges.push_back({i, off + j});
    }
    return {n1 * (1 + n2), std::move(edges)};
}

// G1 first, then copy j of G2 for the j-th edge of G1 in sorted order
inline Graph edge_corona(const Graph& g1, const Graph& g2) {
    if (g1.size() < 1) throw std::invalid_argument("edge_corona: first graph has no edges");
    if (g2.order() < 1) throw std::invalid_argument("edge_corona: second graph has no vertices");
    const std::size_t n1 = g1.order(), n2 = g2.order(), m1 = g1.size();
    std::vector<Edge> edges = g1.edges();
    for (std::size_t k = 0; k < m1; ++k) {
        const std::size_t off = n1 + k * n2;
        const Edge& host = g1.edges()[k];
        for (const auto& e : g2.edges()) edges.push_back({off + e.u, off + e.v});
        for (std::size_t j = 0; j < n2; ++j) {
            edges.push_back({host.u, off + j});
            edges.push_back({host.v, off + j});
        }
    }
    return {n1 + m1 * n2, std::move(edges)};
}

/// Q = D + A.
inline IntMatrix signless_laplacian(const Graph& g) {
    IntMatrix q(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) q(v, v) = static_cast<unsigned long>(g.degree(v));
    for (const auto& e : g.edges()) {
        q(e.u, e.v) = 1;
        q(e.v, e.u) = 1;
    }
    return q;
}

}  // namespace qwalk
