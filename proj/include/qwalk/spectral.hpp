#pragma once

/**
 * @file spectral.hpp
 * @brief Floating Q-spectrum with walk weights, and the exact multiplicity
 * bound between a graph's Q-spectrum and its complement's.
 *
 * With orthonormal eigenvectors x_l of Q and gamma_l = (sum_i x_il)^2,
 * N_k = sum_l gamma_l q_l^k for every k >= 0.
 */

#include "qwalk/squarefree.hpp"
#include "qwalk/walks.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qwalk {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // descending
    std::vector<double> gammas;       // gammas[l] pairs with eigenvalues[l]
};

inline SpectralDecomposition q_spectrum(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.order());
    if (n < 1) throw std::invalid_argument("q_spectrum: empty graph");
    const IntMatrix q = signless_laplacian(g);
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("q_spectrum: eigensolver failed");

    // Eigen sorts ascending
    SpectralDecomposition out;
    for (Eigen::Index l = n; l-- > 0;) {
        out.eigenvalues.push_back(solver.eigenvalues()(l));
        const double s = solver.eigenvectors().col(l).sum();
        out.gammas.push_back(s * s);
    }
    return out;
}

inline bool verify_walk_decomposition(const Graph& g, std::size_t max_k, double tol) {
    const SpectralDecomposition sd = q_spectrum(g);
    const WalkCounts w = walk_counts_via_power(g, max_k);
    for (std::size_t k = 0; k <= max_k; ++k) {
        double predicted = 0.0;
        for (std::size_t l = 0; l < sd.eigenvalues.size(); ++l)
            predicted += sd.gammas[l] * std::pow(sd.eigenvalues[l], static_cast<double>(k));
        const double exact = w.counts[k].get_d();
        if (std::abs(predicted - exact) > tol * std::max(1.0, exact)) return false;
    }
    return true;
}

namespace detail {

// natural log of a positive big integer
inline double log_integer(const Integer& v) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace detail

inline constexpr std::size_t max_limit_length = 10000;

/// (N_k / n)^(1/k), from the exact N_k, evaluated in the log domain.
inline double q1_limit_estimate(const Graph& g, std::size_t k) {
    if (k < 1) throw std::invalid_argument("q1_limit_estimate: k must be >= 1");
    if (k > max_limit_length) throw std::invalid_argument("q1_limit_estimate: k above 10^4");
    if (g.size() == 0) throw std::invalid_argument("q1_limit_estimate: graph has no edges");
    const Integer nk = walk_count(g, k);
    const double log_ratio = detail::log_integer(nk) - std::log(static_cast<double>(g.order()));
    return std::exp(log_ratio / static_cast<double>(k));
}

struct MultiplicityEntry {
    Polynomial factor;                  // roots of f_Q with multiplicity s
    std::size_t s = 0;
    std::vector<std::size_t> t_values;  // multiplicities of those roots in the reflected complement polynomial
    bool t_range_ok = false;
};

struct MultiplicityReport {
    std::vector<MultiplicityEntry> entries;  // one per repeated-eigenvalue block (s >= 2)

    bool passed() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.t_range_ok; });
    }
};

/// For f_Q = c prod u_j^j and h(x) = (-1)^n fbar(n - 2 - x) = c' prod v_j^j,
/// checks that every u_s with s >= 2 divides v_{s-1} v_s v_{s+1}: an eigenvalue
/// q0 of multiplicity s maps to n - 2 - q0 in the complement with multiplicity
/// in [s-1, s+1].
inline MultiplicityReport verify_multiplicity_bound(const QPolynomials& qp) {
    const SquarefreeDecomposition fd = squarefree_decomposition(qp.f);
    const SquarefreeDecomposition hd = squarefree_decomposition(qp.reflected_complement());
    MultiplicityReport report;
    for (const auto& [u, s] : fd.factors) {
        if (s < 2) continue;
        MultiplicityEntry entry{u, s, {}, false};
        for (const auto& [v, t] : hd.factors)
            if (gcd(u, v).degree() > 0) entry.t_values.push_back(t);
        const Polynomial window = hd.part(s - 1) * hd.part(s) * hd.part(s + 1);
        entry.t_range_ok = u.divides(window);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

inline MultiplicityReport verify_multiplicity_bound(const Graph& g) {
    return verify_multiplicity_bound(QPolynomials::of(g));
}

}  // namespace qwalk
