#pragma once

/**
 * @file verify.hpp
 * @brief Identity sweeps behind `qwalk verify`.
 *
 * Each sweep checks one closed-form identity against its independent route
 * (direct construction + char-poly, matrix powers, adjugate sums, ...) over a
 * reproducible population and reports every failing graph in graph6 form.
 * The sweep identifiers are the command-line names.
 */

#include "qwalk/operations.hpp"
#include "qwalk/population.hpp"
#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qwalk {

struct SweepOptions {
    std::size_t max_n = 6;
    std::uint64_t seed = 1;
    std::size_t samples = 500;
    std::size_t order = 12;  // series truncation
    double tol = 1e-9;
    std::size_t threads = 0;  // 0: QWALK_THREADS or hardware concurrency
};

struct SweepFailure {
    std::string graph6;
    std::string detail;
};

struct SweepReport {
    std::string name;
    std::string title;
    std::size_t checked = 0;
    std::vector<SweepFailure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

inline std::size_t worker_count(std::size_t requested) {
    std::size_t n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("QWALK_THREADS")) n = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
        if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    }
    return std::max<std::size_t>(1, n);
}

/// Runs check(i) for i in [0, count) on up to `threads` workers; results are
/// returned in index order regardless of scheduling.
inline std::vector<std::optional<std::string>> parallel_checks(
    std::size_t count, std::size_t threads, const std::function<std::optional<std::string>(std::size_t)>& check) {
    std::vector<std::optional<std::string>> results(count);
    auto run = [&](std::size_t worker, std::size_t workers) {
        for (std::size_t i = worker; i < count; i += workers) {
            try {
                results[i] = check(i);
            } catch (const std::exception& e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const std::size_t workers = std::min(worker_count(threads), std::max<std::size_t>(count, 1));
    if (workers == 1) {
        run(0, 1);
        return results;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
    return results;
}

namespace detail {

inline std::string pair_label(const Graph& a, const Graph& b) { return to_graph6(a) + " " + to_graph6(b); }

// all graphs up to min(max_n, 4) plus `samples` seeded graphs on [5, max_n]
inline std::vector<Graph> standard_population(const SweepOptions& opt) {
    std::vector<Graph> out = all_graphs_up_to(std::min<std::size_t>(opt.max_n, 4));
    if (opt.max_n >= 5) {
        auto extra = sample_graphs(opt.seed, opt.samples, 5, opt.max_n);
        out.insert(out.end(), extra.begin(), extra.end());
    }
    return out;
}

inline SweepReport per_graph(std::string name, std::string title, const std::vector<Graph>& graphs,
                             const SweepOptions& opt, const std::function<std::optional<std::string>(const Graph&)>& check) {
    SweepReport rep{std::move(name), std::move(title), graphs.size(), {}, {}};
    auto results = parallel_checks(graphs.size(), opt.threads, [&](std::size_t i) { return check(graphs[i]); });
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (results[i]) rep.failures.push_back({to_graph6(graphs[i]), *results[i]});
    return rep;
}

inline SweepReport per_pair(std::string name, std::string title, const std::vector<Graph>& firsts,
                            const std::vector<Graph>& seconds, const SweepOptions& opt,
                            const std::function<std::optional<std::string>(const Graph&, const Graph&)>& check) {
    const std::size_t count = firsts.size() * seconds.size();
    SweepReport rep{std::move(name), std::move(title), count, {}, {}};
    auto results = parallel_checks(count, opt.threads, [&](std::size_t i) {
        return check(firsts[i / seconds.size()], seconds[i % seconds.size()]);
    });
    for (std::size_t i = 0; i < count; ++i)
        if (results[i])
            rep.failures.push_back({pair_label(firsts[i / seconds.size()], seconds[i % seconds.size()]), *results[i]});
    return rep;
}

inline std::vector<Graph> catalog_graphs() {
    std::vector<Graph> out;
    for (auto& ng : regular_catalog()) out.push_back(ng.graph);
    return out;
}

}  // namespace detail

// --- individual sweeps -----------------------------------------------------

inline SweepReport sweep_walk_oracle(const SweepOptions& opt) {
    return detail::per_graph("walks", "enumerated semi-edge walks equal entry sums of Q^k (k <= 4)",
                             detail::standard_population(opt), opt, [](const Graph& g) -> std::optional<std::string> {
                                 const WalkCounts w = walk_counts_via_power(g, 4);
                                 for (std::size_t k = 0; k <= 4; ++k)
                                     if (enumerate_semi_edge_walks(g, k) != w.counts[k])
                                         return "mismatch at k=" + std::to_string(k);
                                 return std::nullopt;
                             });
}

inline SweepReport sweep_generating_function(const SweepOptions& opt) {
    return detail::per_graph("prop2.1", "series of W(t) from Q-polynomials equals N_0..N_K",
                             detail::standard_population(opt), opt, [&](const Graph& g) -> std::optional<std::string> {
                                 const PowerSeries s = series_expand(q_generating_function(g), opt.order);
                                 const WalkCounts w = walk_counts_via_power(g, opt.order);
                                 for (std::size_t k = 0; k <= opt.order; ++k)
                                     if (s.coeffs[k] != Rational(w.counts[k])) return "N_" + std::to_string(k) + " differs";
                                 return std::nullopt;
                             });
}

inline SweepReport sweep_coronal(const SweepOptions& opt) {
    return detail::per_graph("prop2.10", "Q-coronal from Q-polynomials equals the adjugate-sum ratio",
                             detail::standard_population(opt), opt, [&](const Graph& g) -> std::optional<std::string> {
                                 const RationalFunction gamma = q_coronal(g);
                                 if (gamma != sum_adjugate_ratio(signless_laplacian(g)))
                                     return "coronal " + gamma.to_string("lambda") + " != adjugate sum";
                                 if (!coronal_series_check(g, opt.order)) return "1/lambda expansion differs from N_k";
                                 return std::nullopt;
                             });
}

inline SweepReport sweep_regular_complement(const SweepOptions& opt) {
    return detail::per_graph(
        "thm2.2", "complement Q-polynomial and Q-spectrum of regular graphs", detail::catalog_graphs(), opt,
        [&](const Graph& g) -> std::optional<std::string> {
            const RegularGraphStats s = RegularGraphStats::of(g);
            const Graph gc = complement(g);
            const RationalFunction formula = complement_qpoly_regular(q_polynomial(g), s);
            if (!formula.is_polynomial()) return "pole did not cancel";
            if (formula.to_polynomial() != q_polynomial(gc)) return "polynomial mismatch";
            const auto predicted = complement_qspectrum_regular(q_spectrum(g).eigenvalues, s);
            const auto actual = q_spectrum(gc).eigenvalues;
            for (std::size_t i = 0; i < actual.size(); ++i)
                if (std::abs(predicted[i] - actual[i]) > 1e-8) return "spectrum mismatch";
            return std::nullopt;
        });
}

inline SweepReport sweep_join(const SweepOptions& opt) {
    const auto graphs = all_graphs_up_to(std::min<std::size_t>(opt.max_n, 4));
    std::vector<QPolynomials> qps;
    for (const auto& g : graphs) qps.push_back(QPolynomials::of(g));
    const std::size_t count = graphs.size() * graphs.size();
    SweepReport rep{"thm2.3", "join Q-polynomial from both graphs and complements", count, {}, {}};
    auto results = parallel_checks(count, opt.threads, [&](std::size_t i) -> std::optional<std::string> {
        const std::size_t a = i / graphs.size(), b = i % graphs.size();
        if (join_qpoly(qps[a], qps[b]) != q_polynomial(join(graphs[a], graphs[b]))) return "polynomial mismatch";
        return std::nullopt;
    });
    for (std::size_t i = 0; i < count; ++i)
        if (results[i])
            rep.failures.push_back({detail::pair_label(graphs[i / graphs.size()], graphs[i % graphs.size()]), *results[i]});
    return rep;
}

inline SweepReport sweep_regular_join(const SweepOptions& opt) {
    const auto cat = detail::catalog_graphs();
    return detail::per_pair("cor2.4", "join Q-polynomial of two regular graphs", cat, cat, opt,
                            [](const Graph& a, const Graph& b) -> std::optional<std::string> {
                                const Polynomial f = join_qpoly_regular(q_polynomial(a), q_polynomial(b),
                                                                        RegularGraphStats::of(a), RegularGraphStats::of(b));
                                if (f != q_polynomial(join(a, b))) return "polynomial mismatch";
                                return std::nullopt;
                            });
}

inline SweepReport sweep_regular_join_coronal(const SweepOptions& opt) {
    const auto cat = detail::catalog_graphs();
    return detail::per_pair("prop2.13", "Q-coronal of the join of two regular graphs", cat, cat, opt,
                            [](const Graph& a, const Graph& b) -> std::optional<std::string> {
                                if (join_coronal_regular(RegularGraphStats::of(a), RegularGraphStats::of(b)) !=
                                    q_coronal(join(a, b)))
                                    return "coronal mismatch";
                                return std::nullopt;
                            });
}

inline SweepReport sweep_walk_decomposition(const SweepOptions& opt) {
    return detail::per_graph("thm2.5", "N_k = sum gamma_l q_l^k (k <= 10)", detail::standard_population(opt), opt,
                             [&](const Graph& g) -> std::optional<std::string> {
                                 if (!verify_walk_decomposition(g, 10, opt.tol)) return "decomposition off tolerance";
                                 return std::nullopt;
                             });
}

inline SweepReport sweep_spectral_radius_limit(const SweepOptions&) {
    SweepReport rep{"thm2.6", "(N_k/n)^(1/k) approaches the Q-spectral radius", 0, {}, {}};
    const Graph p3 = generators::path(3);
    const double est = q1_limit_estimate(p3, 1000);
    ++rep.checked;
    if (std::abs(est - 3.0) > 4e-4) rep.failures.push_back({to_graph6(p3), "k=1000 estimate " + std::to_string(est)});
    for (const auto& ng : regular_catalog()) {
        if (ng.graph.size() == 0) continue;
        const double target = 2.0 * static_cast<double>(*ng.graph.regular_degree());
        for (std::size_t k : {1u, 2u, 7u, 50u, 500u}) {
            ++rep.checked;
            if (std::abs(q1_limit_estimate(ng.graph, k) - target) > 1e-12)
                rep.failures.push_back({to_graph6(ng.graph), "k=" + std::to_string(k) + " estimate differs from 2r"});
        }
    }
    return rep;
}

inline SweepReport sweep_multiplicity(const SweepOptions& opt) {
    std::vector<Graph> graphs = all_graphs_up_to(std::min<std::size_t>(opt.max_n, 5));
    if (opt.max_n >= 1) {
        auto extra = sample_graphs(opt.seed, opt.samples, 1, opt.max_n);
        graphs.insert(graphs.end(), extra.begin(), extra.end());
    }
    return detail::per_graph("thm2.7", "repeated Q-eigenvalue multiplicities survive complementation within +-1", graphs,
                             opt, [](const Graph& g) -> std::optional<std::string> {
                                 if (!verify_multiplicity_bound(g).passed()) return "multiplicity outside [s-1, s+1]";
                                 return std::nullopt;
                             });
}

inline const std::vector<Graph>& corona_hosts() {
    static const std::vector<Graph> hosts = {generators::complete(1), generators::complete(2), generators::complete(3),
                                             generators::path(3), generators::cycle(4)};
    return hosts;
}

inline const std::vector<Graph>& edge_corona_hosts() {
    static const std::vector<Graph> hosts = {generators::complete(2), generators::complete(3), generators::cycle(4),
                                             generators::complete(4)};
    return hosts;
}

inline SweepReport sweep_corona(const SweepOptions& opt) {
    return detail::per_pair("thm2.8", "corona Q-polynomial, coronal and coronal-free forms", corona_hosts(),
                            all_graphs_up_to(3), opt, [](const Graph& a, const Graph& b) -> std::optional<std::string> {
                                const Polynomial direct = q_polynomial(corona(a, b));
                                const Polynomial f1 = q_polynomial(a);
                                const QPolynomials q2 = QPolynomials::of(b);
                                if (corona_qpoly(f1, a.order(), q2) != direct) return "coronal form mismatch";
                                if (corona_qpoly_coronal_free(f1, a.order(), q2) != direct)
                                    return "coronal-free form mismatch";
                                return std::nullopt;
                            });
}

inline SweepReport sweep_edge_corona(const SweepOptions& opt) {
    const auto seconds = all_graphs_up_to(3);
    SweepReport rep = detail::per_pair(
        "thm2.9", "edge-corona Q-polynomial, coronal and coronal-free forms", edge_corona_hosts(), seconds, opt,
        [](const Graph& a, const Graph& b) -> std::optional<std::string> {
            const Polynomial direct = q_polynomial(edge_corona(a, b));
            const Polynomial f1 = q_polynomial(a);
            const RegularGraphStats s1 = RegularGraphStats::of(a);
            const QPolynomials q2 = QPolynomials::of(b);
            if (edge_corona_qpoly(f1, s1, q2) != direct) return "coronal form mismatch";
            if (edge_corona_qpoly_coronal_free(f1, s1, q2) != direct) return "coronal-free form mismatch";
            return std::nullopt;
        });
    std::size_t unshifted_matches = 0, total = 0;
    for (const auto& a : edge_corona_hosts())
        for (const auto& b : seconds) {
            ++total;
            const RationalFunction r =
                edge_corona_qpoly_unshifted_reading(q_polynomial(a), RegularGraphStats::of(a), QPolynomials::of(b));
            if (r == RationalFunction(q_polynomial(edge_corona(a, b)))) ++unshifted_matches;
        }
    rep.notes.push_back("ratio fbar2(n2 - x)/f2(x - 2) [shifted]: matches construction on " +
                        std::to_string(total - rep.failures.size()) + " of " + std::to_string(total) + " pairs");
    rep.notes.push_back("ratio fbar2(n2 - x)/f2(x) [unshifted reading]: matches construction on " +
                        std::to_string(unshifted_matches) + " of " + std::to_string(total) + " pairs");
    return rep;
}

inline SweepReport sweep_genfun_transforms(const SweepOptions& opt) {
    const auto graphs = detail::standard_population(opt);
    SweepReport rep = detail::per_graph(
        "thm2.14", "generating-function transforms: complement, direct sum, join", graphs, opt,
        [](const Graph& g) -> std::optional<std::string> {
            const RationalFunction w = q_generating_function(g);
            const RationalFunction wc = genfun_complement(w, g.order());
            if (wc != q_generating_function(complement(g))) return "complement transform differs from direct W";
            if (genfun_complement(wc, g.order()) != w) return "complement transform is not an involution";
            return std::nullopt;
        });
    // pairwise union and join over the small graphs
    const auto small = all_graphs_up_to(std::min<std::size_t>(opt.max_n, 3));
    SweepReport pairs = detail::per_pair(
        "thm2.14", "", small, small, opt, [](const Graph& a, const Graph& b) -> std::optional<std::string> {
            const RationalFunction wa = q_generating_function(a), wb = q_generating_function(b);
            if (genfun_direct_sum(wa, wb) != q_generating_function(disjoint_union(a, b))) return "direct sum differs";
            const std::vector<JoinPart> parts = {{wa, a.order()}, {wb, b.order()}};
            if (genfun_join(parts) != q_generating_function(join(a, b))) return "join differs";
            return std::nullopt;
        });
    rep.checked += pairs.checked;
    rep.failures.insert(rep.failures.end(), pairs.failures.begin(), pairs.failures.end());
    std::size_t unsubstituted = 0;
    for (const auto& a : small)
        for (const auto& b : small) {
            const std::vector<JoinPart> parts = {{q_generating_function(a), a.order()}, {q_generating_function(b), b.order()}};
            unsubstituted += genfun_join_unsubstituted_reading(parts) == q_generating_function(join(a, b));
        }
    rep.notes.push_back("join with W_i(t) in place of W_i(t / ((n_i - n)t + 1)): matches construction on " +
                        std::to_string(unsubstituted) + " of " + std::to_string(small.size() * small.size()) + " pairs");
    return rep;
}

inline SweepReport sweep_multipartite(const SweepOptions& opt) {
    const auto lists = part_lists(std::max<std::size_t>(opt.max_n, 7));
    SweepReport rep{"ex2.16", "complete multipartite W(t) and Q-coronal", lists.size(), {}, {}};
    auto results = parallel_checks(lists.size(), opt.threads, [&](std::size_t i) -> std::optional<std::string> {
        const auto& parts = lists[i];
        const Graph g = generators::complete_multipartite(parts);
        const RationalFunction w = q_generating_function(g);
        if (multipartite_genfun(parts) != w) return "closed-form W differs";
        if (parts.size() >= 2) {
            std::vector<JoinPart> jp;
            for (auto p : parts) jp.push_back({RationalFunction(Rational(static_cast<unsigned long>(p))), p});
            if (genfun_join(jp) != w) return "iterated join W differs";
        }
        if (multipartite_coronal(parts) != q_coronal(g)) return "coronal differs";
        return std::nullopt;
    });
    for (std::size_t i = 0; i < lists.size(); ++i)
        if (results[i]) rep.failures.push_back({to_graph6(generators::complete_multipartite(lists[i])), *results[i]});
    return rep;
}

struct SweepEntry {
    std::string name;
    std::function<SweepReport(const SweepOptions&)> run;
};

inline const std::vector<SweepEntry>& sweep_registry() {
    static const std::vector<SweepEntry> registry = {
        {"walks", sweep_walk_oracle},
        {"prop2.1", sweep_generating_function},
        {"prop2.10", sweep_coronal},
        {"thm2.2", sweep_regular_complement},
        {"thm2.3", sweep_join},
        {"cor2.4", sweep_regular_join},
        {"thm2.5", sweep_walk_decomposition},
        {"thm2.6", sweep_spectral_radius_limit},
        {"thm2.7", sweep_multiplicity},
        {"thm2.8", sweep_corona},
        {"thm2.9", sweep_edge_corona},
        {"prop2.13", sweep_regular_join_coronal},
        {"thm2.14", sweep_genfun_transforms},
        {"ex2.16", sweep_multipartite},
    };
    return registry;
}

inline SweepReport run_sweep(const std::string& name, const SweepOptions& opt) {
    for (const auto& e : sweep_registry())
        if (e.name == name) return e.run(opt);
    throw std::invalid_argument("unknown sweep '" + name + "'");
}

}  // namespace qwalk
