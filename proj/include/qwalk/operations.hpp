#pragma once

/**
 * @file operations.hpp
 * @brief Closed-form Q-polynomials, Q-coronals and Q-generating functions of
 * graphs built by complement, union, join, corona and edge corona.
 *
 * Everything here works from the operands' invariants (Q-polynomials,
 * coronals, generating functions or regular-graph stats) and never builds the
 * resulting graph; the test suites compare each formula with the direct
 * char-poly of the constructed graph.
 *
 * Entry points that take RegularGraphStats trust the caller that the stats
 * describe a regular graph. Failure of an expected cancellation surfaces as
 * std::domain_error.
 */

#include "qwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct RegularGraphStats {
    std::size_t n = 0;
    std::size_t r = 0;

    RegularGraphStats() = default;

    RegularGraphStats(std::size_t order, std::size_t degree) : n(order), r(degree) {
        if (n == 0 || r >= n || (n * r) % 2 != 0)
            throw std::invalid_argument("RegularGraphStats: no " + std::to_string(r) + "-regular graph on " +
                                        std::to_string(n) + " vertices");
    }

    static RegularGraphStats of(const Graph& g) {
        auto r = g.regular_degree();
        if (!r) throw std::invalid_argument("RegularGraphStats: graph is not regular");
        return {g.order(), *r};
    }

    std::size_t m() const { return n * r / 2; }
};

namespace detail {

inline Rational as_rational(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

inline Polynomial sign_power(std::size_t e, Polynomial p) { return e % 2 ? -p : p; }

// x - c
inline Polynomial x_minus(const Rational& c) { return Polynomial::linear(1, -c); }

}  // namespace detail

// ---------------------------------------------------------------------------
// complement of a regular graph
// ---------------------------------------------------------------------------

/// (-1)^n (1 + n/(n - 2 - 2r - x)) f(n - 2 - x). For an r-regular input the
/// pole cancels and the result is the complement's Q-polynomial.
inline RationalFunction complement_qpoly_regular(const Polynomial& f, const RegularGraphStats& s) {
    using detail::as_rational;
    const Rational n = as_rational(s.n), r = as_rational(s.r);
    // 1 + n/(c - x) = (c + n - x)/(c - x), c = n - 2 - 2r
    const Rational c = n - 2 - 2 * r;
    const RationalFunction factor(Polynomial::linear(-1, c + n), Polynomial::linear(-1, c));
    const Polynomial reflected = detail::sign_power(s.n, affine_substitute(f, -1, n - 2));
    return factor * reflected;
}

/// {2(n - r - 1)} ∪ {n - 2 - q_i : i >= 2}, sorted descending. The input must be
/// sorted descending with leading value 2r.
inline std::vector<double> complement_qspectrum_regular(std::span<const double> spectrum, const RegularGraphStats& s,
                                                        double tol = 1e-9) {
    if (spectrum.size() != s.n) throw std::invalid_argument("complement_qspectrum_regular: spectrum size != n");
    const double top = 2.0 * static_cast<double>(s.r);
    if (std::abs(spectrum[0] - top) > tol * std::max(1.0, top))
        throw std::invalid_argument("complement_qspectrum_regular: leading eigenvalue is not 2r");
    const double n = static_cast<double>(s.n);
    std::vector<double> out;
    out.push_back(2.0 * (n - static_cast<double>(s.r) - 1.0));
    for (std::size_t i = 1; i < spectrum.size(); ++i) out.push_back(n - 2.0 - spectrum[i]);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------------------
// join
// ---------------------------------------------------------------------------

/// Q-polynomial of G1 ∨ G2 from the Q-polynomials of G1, G2 and their complements:
///   (-1)^n2 f1(x - n2) fbar2(n - x - 2) + (-1)^n1 f2(x - n1) fbar1(n - x - 2)
///   - (-1)^n fbar1(n - x - 2) fbar2(n - x - 2),   n = n1 + n2.
inline Polynomial join_qpoly(const QPolynomials& g1, const QPolynomials& g2) {
    using detail::as_rational;
    const std::size_t n1 = g1.order, n2 = g2.order, n = n1 + n2;
    const Rational shift = as_rational(n) - 2;
    const Polynomial fbar1 = affine_substitute(g1.f_complement, -1, shift);
    const Polynomial fbar2 = affine_substitute(g2.f_complement, -1, shift);
    const Polynomial t1 = detail::sign_power(n2, affine_substitute(g1.f, 1, -as_rational(n2)) * fbar2);
    const Polynomial t2 = detail::sign_power(n1, affine_substitute(g2.f, 1, -as_rational(n1)) * fbar1);
    const Polynomial t3 = detail::sign_power(n, fbar1 * fbar2);
    return t1 + t2 - t3;
}

/// (1 - n1 n2 / ((x - n1 - 2 r2)(x - n2 - 2 r1))) f1(x - n2) f2(x - n1) for
/// regular G1, G2.
inline Polynomial join_qpoly_regular(const Polynomial& f1, const Polynomial& f2, const RegularGraphStats& s1,
                                     const RegularGraphStats& s2) {
    using detail::as_rational;
    const Rational n1 = as_rational(s1.n), n2 = as_rational(s2.n);
    const Polynomial a = detail::x_minus(n1 + 2 * as_rational(s2.r));
    const Polynomial b = detail::x_minus(n2 + 2 * as_rational(s1.r));
    const RationalFunction prefactor(a * b - Polynomial::constant(n1 * n2), a * b);
    const Polynomial body = affine_substitute(f1, 1, -n2) * affine_substitute(f2, 1, -n1);
    return (prefactor * body).to_polynomial();
}

/// Q-coronal of G1 ∨ G2 for regular G1, G2:
///   [(x - n2 - 2r1) n2 + (x - n1 - 2r2) n1 + 2 n1 n2] / [(x - n2 - 2r1)(x - n1 - 2r2) - n1 n2]
inline RationalFunction join_coronal_regular(const RegularGraphStats& s1, const RegularGraphStats& s2) {
    using detail::as_rational;
    const Rational n1 = as_rational(s1.n), n2 = as_rational(s2.n);
    const Polynomial a = detail::x_minus(n2 + 2 * as_rational(s1.r));
    const Polynomial b = detail::x_minus(n1 + 2 * as_rational(s2.r));
    const Polynomial num = a * n2 + b * n1 + Polynomial::constant(2 * n1 * n2);
    const Polynomial den = a * b - Polynomial::constant(n1 * n2);
    return {num, den};
}

// ---------------------------------------------------------------------------
// corona
// ---------------------------------------------------------------------------

/// Q-polynomial of G1 ∘ G2 through the coronal of G2:
///   f2(x - 1)^n1 f1(x - n2 - Γ2(x - 1)).
inline Polynomial corona_qpoly(const Polynomial& f1, std::size_t n1, const QPolynomials& g2) {
    using detail::as_rational;
    if (g2.order < 1) throw std::invalid_argument("corona_qpoly: second graph has no vertices");
    const RationalFunction gamma_shifted = q_coronal(g2).affine_substitute(1, -1);
    const RationalFunction arg = RationalFunction(detail::x_minus(as_rational(g2.order))) - gamma_shifted;
    const Polynomial lifted = affine_substitute(g2.f, 1, -1).pow(n1);
    return (compose(f1, arg) * lifted).to_polynomial();
}

inline Polynomial corona_qpoly(const Polynomial& f1, std::size_t n1, const Graph& g2) {
    return corona_qpoly(f1, n1, QPolynomials::of(g2));
}

/// Coronal-free form of the corona Q-polynomial:
///   f2(x - 1)^n1 f1(x - n2 + 1 - (-1)^n2 fbar2(n2 - x - 1) / f2(x - 1)).
/// The vertex count inside fbar2's argument is that of G2.
inline Polynomial corona_qpoly_coronal_free(const Polynomial& f1, std::size_t n1, const QPolynomials& g2) {
    using detail::as_rational;
    const Rational n2 = as_rational(g2.order);
    const Polynomial f2_shifted = affine_substitute(g2.f, 1, -1);
    const Polynomial fbar2_reflected = detail::sign_power(g2.order, affine_substitute(g2.f_complement, -1, n2 - 1));
    const RationalFunction arg =
        RationalFunction(detail::x_minus(n2 - 1)) - RationalFunction(fbar2_reflected, f2_shifted);
    return (compose(f1, arg) * f2_shifted.pow(n1)).to_polynomial();
}

// ---------------------------------------------------------------------------
// edge corona (G1 regular)
// ---------------------------------------------------------------------------

/// Q-polynomial of G1 ⋄ G2 for r1-regular G1, through the coronal of G2:
///   f2(x - 2)^m1 f1((x - r1 n2) / (1 + Γ2(x - 2))) (1 + Γ2(x - 2))^n1.
inline Polynomial edge_corona_qpoly(const Polynomial& f1, const RegularGraphStats& s1, const QPolynomials& g2) {
    using detail::as_rational;
    if (s1.m() < 1) throw std::invalid_argument("edge_corona_qpoly: first graph has no edges");
    if (g2.order < 1) throw std::invalid_argument("edge_corona_qpoly: second graph has no vertices");
    const RationalFunction one_plus_gamma = RationalFunction(Rational(1)) + q_coronal(g2).affine_substitute(1, -2);
    const RationalFunction arg = RationalFunction(detail::x_minus(as_rational(s1.r * g2.order))) / one_plus_gamma;
    const Polynomial lifted = affine_substitute(g2.f, 1, -2).pow(s1.m());
    return (compose(f1, arg) * one_plus_gamma.pow(s1.n) * lifted).to_polynomial();
}

inline Polynomial edge_corona_qpoly(const Polynomial& f1, const RegularGraphStats& s1, const Graph& g2) {
    return edge_corona_qpoly(f1, s1, QPolynomials::of(g2));
}

namespace detail {

// f2(x-2)^m1 f1((x - r1 n2)/ratio) ratio^n1, for a given 1 + Γ2(x - 2) stand-in
inline RationalFunction edge_corona_from_ratio(const Polynomial& f1, const RegularGraphStats& s1,
                                               const QPolynomials& g2, const RationalFunction& ratio) {
    const RationalFunction arg = RationalFunction(x_minus(as_rational(s1.r * g2.order))) / ratio;
    const Polynomial lifted = affine_substitute(g2.f, 1, -2).pow(s1.m());
    return compose(f1, arg) * ratio.pow(s1.n) * lifted;
}

}  // namespace detail

/// Coronal-free edge-corona Q-polynomial using
///   1 + Γ2(x - 2) = (-1)^n2 fbar2(n2 - x) / f2(x - 2).
inline Polynomial edge_corona_qpoly_coronal_free(const Polynomial& f1, const RegularGraphStats& s1,
                                                 const QPolynomials& g2) {
    const Rational n2 = detail::as_rational(g2.order);
    const Polynomial top = detail::sign_power(g2.order, affine_substitute(g2.f_complement, -1, n2));
    const RationalFunction ratio(top, affine_substitute(g2.f, 1, -2));
    return detail::edge_corona_from_ratio(f1, s1, g2, ratio).to_polynomial();
}

/// The coronal-free edge-corona expression with the ratio taken as
/// (-1)^n2 fbar2(n2 - x) / f2(x), i.e. with f2 evaluated at x rather than
/// x - 2. Kept for the discrepancy report; this reading does not in general
/// produce the Q-polynomial, so the result is left as a rational function.
inline RationalFunction edge_corona_qpoly_unshifted_reading(const Polynomial& f1, const RegularGraphStats& s1,
                                                            const QPolynomials& g2) {
    const Rational n2 = detail::as_rational(g2.order);
    const Polynomial top = detail::sign_power(g2.order, affine_substitute(g2.f_complement, -1, n2));
    const RationalFunction ratio(top, g2.f);
    return detail::edge_corona_from_ratio(f1, s1, g2, ratio);
}

// ---------------------------------------------------------------------------
// generating-function transforms
// ---------------------------------------------------------------------------

/// W of the complement from W of a graph on n vertices:
///   -W(s) / ((n - 2)t - 1 + t W(s)),   s = t / ((n - 2)t - 1).
inline RationalFunction genfun_complement(const RationalFunction& w, std::size_t n) {
    const Polynomial lin = Polynomial::linear(detail::as_rational(n) - 2, -1);
    const RationalFunction s(Polynomial::identity(), lin);
    const RationalFunction ws = compose(w, s);
    const RationalFunction den = RationalFunction(lin) + RationalFunction(Polynomial::identity()) * ws;
    if (den.is_zero()) throw std::domain_error("genfun_complement: degenerate denominator");
    return -ws / den;
}

inline RationalFunction genfun_direct_sum(const RationalFunction& w1, const RationalFunction& w2) { return w1 + w2; }

struct JoinPart {
    RationalFunction w;
    std::size_t n;
};

namespace detail {

// M / (1 - tM) where M sums W_i(sigma_i) / ((n_i - n)t + 1 + t W_i(sigma_i))
inline RationalFunction join_from_terms(std::span<const JoinPart> parts, bool substitute) {
    if (parts.size() < 2) throw std::invalid_argument("genfun_join: need at least two parts");
    std::size_t total = 0;
    for (const auto& p : parts) total += p.n;
    const RationalFunction t(Polynomial::identity());
    RationalFunction m;
    for (const auto& p : parts) {
        const Polynomial lin = Polynomial::linear(as_rational(p.n) - as_rational(total), 1);
        const RationalFunction wi = substitute ? compose(p.w, RationalFunction(Polynomial::identity(), lin)) : p.w;
        const RationalFunction den = RationalFunction(lin) + t * wi;
        if (den.is_zero()) throw std::domain_error("genfun_join: degenerate part denominator");
        m += wi / den;
    }
    const RationalFunction outer = RationalFunction(Rational(1)) - t * m;
    if (outer.is_zero()) throw std::domain_error("genfun_join: degenerate denominator");
    return m / outer;
}

}  // namespace detail

/// W of G1 ∨ ... ∨ Gk: M / (1 - tM), M = sum_i W_i(s_i) / ((n_i - n)t + 1 + t W_i(s_i)),
/// s_i = t / ((n_i - n)t + 1). Obtained by applying the complement transform to each
/// complemented part at t / ((n - 2)t - 1).
inline RationalFunction genfun_join(std::span<const JoinPart> parts) { return detail::join_from_terms(parts, true); }

/// Same shape with W_i(t) in place of W_i(s_i). Agrees with genfun_join only when every
/// W_i is constant (edgeless parts); kept to report the difference.
inline RationalFunction genfun_join_unsubstituted_reading(std::span<const JoinPart> parts) {
    return detail::join_from_terms(parts, false);
}

/// W of the complete multipartite graph:
///   ((sum_i n_i / ((n_i - n)t + 1 + t n_i))^{-1} - t)^{-1}.
inline RationalFunction multipartite_genfun(std::span<const std::size_t> parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite_genfun: no parts");
    std::size_t total = 0;
    for (auto p : parts) {
        if (p < 1) throw std::invalid_argument("multipartite_genfun: part sizes must be >= 1");
        total += p;
    }
    RationalFunction sum;
    for (auto p : parts) {
        const Rational ni = detail::as_rational(p);
        // (n_i - n)t + 1 + t n_i = (2 n_i - n) t + 1
        sum += RationalFunction(Polynomial::constant(ni), Polynomial::linear(2 * ni - detail::as_rational(total), 1));
    }
    return (sum.reciprocal() - RationalFunction(Polynomial::identity())).reciprocal();
}

/// Q-coronal of the complete multipartite graph:
///   ((sum_i n_i / (x - n + 2 n_i))^{-1} - 1)^{-1}.
inline RationalFunction multipartite_coronal(std::span<const std::size_t> parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite_coronal: no parts");
    std::size_t total = 0;
    for (auto p : parts) {
        if (p < 1) throw std::invalid_argument("multipartite_coronal: part sizes must be >= 1");
        total += p;
    }
    RationalFunction sum;
    for (auto p : parts) {
        const Rational ni = detail::as_rational(p);
        sum += RationalFunction(Polynomial::constant(ni), Polynomial::linear(1, 2 * ni - detail::as_rational(total)));
    }
    return (sum.reciprocal() - RationalFunction(Rational(1))).reciprocal();
}

}  // namespace qwalk
