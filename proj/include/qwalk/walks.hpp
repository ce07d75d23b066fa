#pragma once

/**
 * @file walks.hpp
 * @brief Semi-edge walk counts N_k, the Q-generating function W(t) and the
 * Q-coronal of a graph.
 *
 * A semi-edge walk of length k is v_0, e_1, v_1, ..., e_k, v_k where each
 * v_{i-1} and v_i are end-vertices of e_i, not necessarily distinct. N_k is
 * the total number of them and equals the entry sum of Q^k.
 *
 *   W(t)  = sum_k N_k t^k
 *         = (1/t) ((-1)^n fbar(n - 2 - 1/t) / f(1/t) - 1)
 *   Γ(x)  = 1^T (x I - Q)^{-1} 1 = (1/x) W(1/x)
 *         = -1 + (-1)^n fbar(n - 2 - x) / f(x)
 *
 * with f, fbar the Q-polynomials of G and its complement.
 */

#include "qwalk/graph.hpp"
#include "qwalk/power_series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qwalk {

struct WalkCounts {
    std::size_t n = 0;
    std::vector<Integer> counts;  // N_0 .. N_K

    friend bool operator==(const WalkCounts&, const WalkCounts&) = default;
};

/// det(x I - Q(G)).
inline Polynomial q_polynomial(const Graph& g) { return char_poly(signless_laplacian(g)); }

/// Q-polynomials of a graph and of its complement, with the vertex count.
struct QPolynomials {
    Polynomial f;
    Polynomial f_complement;
    std::size_t order = 0;

    static QPolynomials of(const Graph& g) { return {q_polynomial(g), q_polynomial(complement(g)), g.order()}; }

    // (-1)^n fbar(n - 2 - x), the numerator polynomial shared by W and Γ
    Polynomial reflected_complement() const {
        Polynomial h = affine_substitute(f_complement, -1, Rational(static_cast<long>(order)) - 2);
        return order % 2 ? -h : h;
    }
};

namespace detail {

inline Integer count_from(const Graph& g, const std::vector<std::vector<std::size_t>>& incident, std::size_t v,
                          std::size_t remaining) {
    if (remaining == 0) return 1;
    Integer total = 0;
    for (std::size_t e : incident[v]) {
        const Edge& edge = g.edges()[e];
        total += count_from(g, incident, edge.u, remaining - 1);
        total += count_from(g, incident, edge.v, remaining - 1);
    }
    return total;
}

}  // namespace detail

/// N_k by exhaustive depth-first enumeration; cost grows like (2m)^k.
inline Integer enumerate_semi_edge_walks(const Graph& g, std::size_t k) {
    std::vector<std::vector<std::size_t>> incident(g.order());
    for (std::size_t e = 0; e < g.size(); ++e) {
        incident[g.edges()[e].u].push_back(e);
        incident[g.edges()[e].v].push_back(e);
    }
    Integer total = 0;
    for (std::size_t v = 0; v < g.order(); ++v) total += detail::count_from(g, incident, v, k);
    return total;
}

/// N_0..N_K as entry sums of exact integer powers of Q.
inline WalkCounts walk_counts_via_power(const Graph& g, std::size_t max_k) {
    WalkCounts out{g.order(), {}};
    const IntMatrix q = signless_laplacian(g);
    IntMatrix power = IntMatrix::identity(g.order());
    for (std::size_t k = 0; k <= max_k; ++k) {
        out.counts.push_back(power.sum());
        if (k < max_k) power = power * q;
    }
    return out;
}

/// Single N_k as 1^T Q^k 1, by repeated matrix-vector products.
inline Integer walk_count(const Graph& g, std::size_t k) {
    const IntMatrix q = signless_laplacian(g);
    std::vector<Integer> x(g.order(), Integer(1));
    for (std::size_t i = 0; i < k; ++i) x = q.apply(x);
    Integer s = 0;
    for (const auto& xi : x) s += xi;
    return s;
}

/// W(t) from the Q-polynomials of G and its complement. With D(t) = t^n f(1/t)
/// and A(t) = (-1)^n t^n fbar(n - 2 - 1/t), W = (A - D) / (t D).
inline RationalFunction q_generating_function(const QPolynomials& qp) {
    const std::size_t n = qp.order;
    const Polynomial d = qp.f.reversed(n);
    const Polynomial a = qp.reflected_complement().reversed(n);
    // A(0) = D(0) = 1, so the difference is divisible by t
    return {(a - d).shifted_down(1), d};
}

inline RationalFunction q_generating_function(const Graph& g) { return q_generating_function(QPolynomials::of(g)); }

inline RationalFunction q_coronal(const QPolynomials& qp) {
    return {qp.reflected_complement() - qp.f, qp.f};
}

inline RationalFunction q_coronal(const Graph& g) { return q_coronal(QPolynomials::of(g)); }

/// Checks that the expansion of Γ in powers of 1/x has coefficient N_k at
/// x^-(k+1) for every k <= max_k, with N_k taken from matrix powers.
inline bool coronal_series_check(const Graph& g, std::size_t max_k) {
    // Γ(1/t) = sum_k N_k t^(k+1)
    const PowerSeries s = series_expand(q_coronal(g).reciprocal_argument(), max_k + 1);
    const WalkCounts w = walk_counts_via_power(g, max_k);
    if (s.coeffs[0] != 0) return false;
    for (std::size_t k = 0; k <= max_k; ++k)
        if (s.coeffs[k + 1] != Rational(w.counts[k])) return false;
    return true;
}

}  // namespace qwalk
