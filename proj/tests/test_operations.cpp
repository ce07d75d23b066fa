#include "qwalk/operations.hpp"
#include "qwalk/population.hpp"
#include "qwalk/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qwalk;
namespace gen = qwalk::generators;

namespace {

Polynomial x() { return Polynomial::identity(); }
Polynomial xm(long c) { return Polynomial::linear(1, -c); }  // x - c
Polynomial c(long v) { return Polynomial::constant(v); }
RationalFunction rf(Polynomial n, Polynomial d) { return {std::move(n), std::move(d)}; }
RationalFunction geometric(long n, long rate) { return rf(c(n), Polynomial({1, -rate})); }  // n/(1 - rate t)

const Graph K1 = gen::complete(1);
const Graph K2 = gen::complete(2);
const Graph K3 = gen::complete(3);
const Graph K4 = gen::complete(4);
const Graph P3 = gen::path(3);
const Graph C4 = gen::cycle(4);
const Graph E2 = gen::empty(2);

QPolynomials qp(const Graph& g) { return QPolynomials::of(g); }

}  // namespace

TEST(RegularGraphStats, Validation) {
    EXPECT_EQ(RegularGraphStats(4, 2).m(), 4u);
    EXPECT_THROW(RegularGraphStats(3, 1), std::invalid_argument);  // odd degree sum
    EXPECT_THROW(RegularGraphStats(3, 3), std::invalid_argument);
    EXPECT_THROW(RegularGraphStats::of(P3), std::invalid_argument);
    EXPECT_EQ(RegularGraphStats::of(C4).r, 2u);
}

TEST(ComplementRegular, Examples) {
    EXPECT_EQ(complement_qpoly_regular(q_polynomial(K3), {3, 2}).to_polynomial(), x().pow(3));
    EXPECT_EQ(complement_qpoly_regular(q_polynomial(C4), {4, 2}).to_polynomial(), xm(2).pow(2) * x().pow(2));
    EXPECT_EQ(complement_qpoly_regular(q_polynomial(K2), {2, 1}).to_polynomial(), x().pow(2));
}

TEST(ComplementRegular, NonRegularInputLeavesDenominator) {
    // P3 paired with made-up stats: the pole does not cancel
    EXPECT_FALSE(complement_qpoly_regular(q_polynomial(P3), {4, 1}).is_polynomial());
}

TEST(ComplementRegular, MatchesDirectCharPolyOnCatalog) {
    for (const auto& ng : regular_catalog()) {
        const RationalFunction r = complement_qpoly_regular(q_polynomial(ng.graph), RegularGraphStats::of(ng.graph));
        ASSERT_TRUE(r.is_polynomial()) << ng.name;
        EXPECT_EQ(r.to_polynomial(), q_polynomial(complement(ng.graph))) << ng.name;
    }
}

TEST(ComplementSpectrum, Examples) {
    const std::vector<double> k3{4, 1, 1}, c4{4, 2, 2, 0}, k2{2, 0};
    EXPECT_EQ(complement_qspectrum_regular(k3, {3, 2}), (std::vector<double>{0, 0, 0}));
    EXPECT_EQ(complement_qspectrum_regular(c4, {4, 2}), (std::vector<double>{2, 2, 0, 0}));
    EXPECT_EQ(complement_qspectrum_regular(k2, {2, 1}), (std::vector<double>{0, 0}));
    EXPECT_THROW(complement_qspectrum_regular(std::vector<double>{3, 1, 0}, {3, 2}), std::invalid_argument);
}

TEST(ComplementSpectrum, MatchesFloatingSpectrumOfComplement) {
    for (const auto& ng : regular_catalog()) {
        const auto predicted =
            complement_qspectrum_regular(q_spectrum(ng.graph).eigenvalues, RegularGraphStats::of(ng.graph));
        const auto actual = q_spectrum(complement(ng.graph)).eigenvalues;
        ASSERT_EQ(predicted.size(), actual.size());
        for (std::size_t i = 0; i < actual.size(); ++i) EXPECT_NEAR(predicted[i], actual[i], 1e-8) << ng.name;
    }
}

TEST(Join, Examples) {
    EXPECT_EQ(join_qpoly(qp(K1), qp(E2)), x() * xm(1) * xm(3));
    EXPECT_EQ(join_qpoly(qp(K1), qp(K1)), x() * xm(2));
    EXPECT_EQ(join_qpoly(qp(E2), qp(E2)), x() * xm(2).pow(2) * xm(4));
}

TEST(Join, MatchesDirectCharPolyForAllSmallPairs) {
    const auto graphs = all_graphs_up_to(4);
    std::vector<QPolynomials> q;
    for (const auto& g : graphs) q.push_back(qp(g));
    for (std::size_t a = 0; a < graphs.size(); ++a)
        for (std::size_t b = 0; b < graphs.size(); ++b) {
            const Polynomial f = join_qpoly(q[a], q[b]);
            ASSERT_EQ(f, q_polynomial(join(graphs[a], graphs[b])))
                << to_graph6(graphs[a]) << " v " << to_graph6(graphs[b]);
            ASSERT_TRUE(f.is_monic());
        }
}

TEST(JoinRegular, Examples) {
    EXPECT_EQ(join_qpoly_regular(q_polynomial(K1), q_polynomial(K1), {1, 0}, {1, 0}), x() * xm(2));
    EXPECT_EQ(join_qpoly_regular(q_polynomial(E2), q_polynomial(E2), {2, 0}, {2, 0}), x() * xm(2).pow(2) * xm(4));
    EXPECT_EQ(join_qpoly_regular(q_polynomial(K3), q_polynomial(K1), {3, 2}, {1, 0}), xm(6) * xm(2).pow(3));
}

TEST(JoinRegular, NonRegularInputFailsToReduce) {
    EXPECT_THROW(join_qpoly_regular(q_polynomial(P3), q_polynomial(K1), {4, 1}, {1, 0}), std::domain_error);
}

TEST(JoinCoronalRegular, Examples) {
    EXPECT_EQ(join_coronal_regular({1, 0}, {1, 0}), rf(c(2), xm(2)));
    EXPECT_EQ(join_coronal_regular({2, 0}, {2, 0}), rf(c(4), xm(4)));
    EXPECT_EQ(join_coronal_regular({3, 2}, {1, 0}), rf(c(4), xm(6)));
}

TEST(JoinCoronalRegular, MatchesCoronalOfConstructedJoin) {
    const auto cat = regular_catalog();
    for (const auto& a : cat)
        for (const auto& b : cat)
            EXPECT_EQ(join_coronal_regular(RegularGraphStats::of(a.graph), RegularGraphStats::of(b.graph)),
                      q_coronal(join(a.graph, b.graph)))
                << a.name << " v " << b.name;
}

TEST(Corona, Examples) {
    EXPECT_EQ(corona_qpoly(q_polynomial(K1), 1, K1), x() * xm(2));
    EXPECT_EQ(corona_qpoly(q_polynomial(K2), 2, K1), Polynomial({0, -4, 10, -6, 1}));
    EXPECT_EQ(corona_qpoly(q_polynomial(K2), 2, K1), x() * xm(2) * Polynomial({2, -4, 1}));
    EXPECT_EQ(corona_qpoly(q_polynomial(K1), 1, K2), xm(4) * xm(1).pow(2));
}

TEST(Corona, BothFormsMatchConstruction) {
    for (const auto& g1 : {K1, K2, K3, P3, C4})
        for (const auto& g2 : all_graphs_up_to(3)) {
            const Polynomial direct = q_polynomial(corona(g1, g2));
            const QPolynomials q2 = qp(g2);
            EXPECT_EQ(corona_qpoly(q_polynomial(g1), g1.order(), q2), direct) << to_graph6(g1) << " o " << to_graph6(g2);
            EXPECT_EQ(corona_qpoly_coronal_free(q_polynomial(g1), g1.order(), q2), direct);
            EXPECT_EQ(direct.degree(), static_cast<int>(g1.order() * (1 + g2.order())));
        }
}

TEST(EdgeCorona, Examples) {
    EXPECT_EQ(edge_corona_qpoly(q_polynomial(K2), {2, 1}, K1), xm(4) * xm(1).pow(2));
    EXPECT_EQ(edge_corona_qpoly(q_polynomial(K2), {2, 1}, E2), q_polynomial(complement(build_graph(4, {{2, 3}}))));
    const Polynomial k3k1 = edge_corona_qpoly(q_polynomial(K3), {3, 2}, K1);
    EXPECT_EQ(k3k1.degree(), 6);
    EXPECT_EQ(k3k1, q_polynomial(edge_corona(K3, K1)));
}

TEST(EdgeCorona, CoronalAndShiftedCoronalFreeFormsMatchConstruction) {
    for (const auto& g1 : {K2, K3, C4, K4})
        for (const auto& g2 : all_graphs_up_to(3)) {
            const Polynomial direct = q_polynomial(edge_corona(g1, g2));
            const RegularGraphStats s1 = RegularGraphStats::of(g1);
            EXPECT_EQ(edge_corona_qpoly(q_polynomial(g1), s1, qp(g2)), direct);
            EXPECT_EQ(edge_corona_qpoly_coronal_free(q_polynomial(g1), s1, qp(g2)), direct);
        }
}

TEST(EdgeCorona, UnshiftedReadingDisagreesWithConstruction) {
    // f2 taken at x instead of x - 2; K2 ⋄ K1 should be K3 but is not
    const RationalFunction r = edge_corona_qpoly_unshifted_reading(q_polynomial(K2), {2, 1}, qp(K1));
    EXPECT_NE(r, RationalFunction(q_polynomial(K3)));
}

TEST(GenfunComplement, Examples) {
    EXPECT_EQ(genfun_complement(geometric(2, 2), 2), RationalFunction(Rational(2)));
    EXPECT_EQ(genfun_complement(RationalFunction(Rational(3)), 3), geometric(3, 4));
    EXPECT_EQ(genfun_complement(genfun_complement(q_generating_function(P3), 3), 3), q_generating_function(P3));
}

TEST(GenfunComplement, InvolutionAndAgreementWithDirectComplement) {
    auto graphs = all_graphs_up_to(4);
    auto extra = sample_graphs(17, 100, 5, 6);
    graphs.insert(graphs.end(), extra.begin(), extra.end());
    for (const auto& g : graphs) {
        const RationalFunction w = q_generating_function(g);
        const RationalFunction wc = genfun_complement(w, g.order());
        EXPECT_EQ(wc, q_generating_function(complement(g))) << to_graph6(g);
        EXPECT_EQ(genfun_complement(wc, g.order()), w) << to_graph6(g);
    }
}

TEST(GenfunDirectSum, Examples) {
    EXPECT_EQ(genfun_direct_sum(geometric(2, 2), geometric(2, 2)), geometric(4, 2));
    EXPECT_EQ(genfun_direct_sum(geometric(2, 2), geometric(2, 2)), q_generating_function(disjoint_union(K2, K2)));
    EXPECT_EQ(genfun_direct_sum(q_generating_function(P3), RationalFunction()), q_generating_function(P3));
    EXPECT_EQ(genfun_direct_sum(RationalFunction(Rational(2)), RationalFunction(Rational(3))),
              RationalFunction(Rational(5)));
}

TEST(GenfunJoin, Examples) {
    const RationalFunction one(Rational(1)), two(Rational(2));
    const std::vector<JoinPart> k2 = {{one, 1}, {one, 1}};
    EXPECT_EQ(genfun_join(k2), geometric(2, 2));
    const std::vector<JoinPart> c4 = {{two, 2}, {two, 2}};
    EXPECT_EQ(genfun_join(c4), geometric(4, 4));
    const std::vector<JoinPart> k3 = {{one, 1}, {one, 1}, {one, 1}};
    EXPECT_EQ(genfun_join(k3), q_generating_function(K3));
    const std::vector<JoinPart> single = {{one, 1}};
    EXPECT_THROW(genfun_join(single), std::invalid_argument);
}

TEST(GenfunJoin, GeneralPairsMatchConstruction) {
    const auto graphs = all_graphs_up_to(3);
    for (const auto& a : graphs)
        for (const auto& b : graphs) {
            const std::vector<JoinPart> parts = {{q_generating_function(a), a.order()},
                                                 {q_generating_function(b), b.order()}};
            EXPECT_EQ(genfun_join(parts), q_generating_function(join(a, b)));
        }
    // three parts, none edgeless
    const Graph k2 = gen::complete(2), p3 = gen::path(3);
    const std::vector<JoinPart> parts = {{q_generating_function(k2), 2}, {q_generating_function(p3), 3}, {q_generating_function(k2), 2}};
    EXPECT_EQ(genfun_join(parts), q_generating_function(join(join(k2, p3), k2)));
}

TEST(GenfunJoin, UnsubstitutedReadingOnlyHoldsForEdgelessParts) {
    // K2 v K1 = K3
    const std::vector<JoinPart> parts = {{q_generating_function(gen::complete(2)), 2}, {RationalFunction(Rational(1)), 1}};
    EXPECT_EQ(genfun_join(parts), geometric(3, 4));
    EXPECT_NE(genfun_join_unsubstituted_reading(parts), geometric(3, 4));
    for (const auto& ps : part_lists(6)) {
        if (ps.size() < 2) continue;
        std::vector<JoinPart> jp;
        for (auto p : ps) jp.push_back({RationalFunction(Rational(static_cast<unsigned long>(p))), p});
        EXPECT_EQ(genfun_join_unsubstituted_reading(jp), genfun_join(jp));
    }
}

TEST(Multipartite, GenfunExamples) {
    EXPECT_EQ(multipartite_genfun(std::vector<std::size_t>{2, 2}), geometric(4, 4));
    EXPECT_EQ(multipartite_genfun(std::vector<std::size_t>{1, 1}), geometric(2, 2));
    EXPECT_EQ(multipartite_genfun(std::vector<std::size_t>{5}), RationalFunction(Rational(5)));
}

TEST(Multipartite, CoronalExamples) {
    EXPECT_EQ(multipartite_coronal(std::vector<std::size_t>{1, 1}), rf(c(2), xm(2)));
    EXPECT_EQ(multipartite_coronal(std::vector<std::size_t>{2, 2}), rf(c(4), xm(4)));
    EXPECT_EQ(multipartite_coronal(std::vector<std::size_t>{1, 1, 1}), q_coronal(K3));
    EXPECT_EQ(multipartite_coronal(std::vector<std::size_t>{1, 1, 1}), rf(c(3), xm(4)));
}

TEST(Multipartite, AgreesWithJoinAndConstruction) {
    for (const auto& parts : part_lists(7)) {
        const Graph g = gen::complete_multipartite(parts);
        EXPECT_EQ(multipartite_genfun(parts), q_generating_function(g));
        EXPECT_EQ(multipartite_coronal(parts), q_coronal(g));
        if (parts.size() >= 2) {
            std::vector<JoinPart> jp;
            for (auto p : parts) jp.push_back({RationalFunction(Rational(static_cast<unsigned long>(p))), p});
            EXPECT_EQ(genfun_join(jp), multipartite_genfun(parts));
        }
    }
}
