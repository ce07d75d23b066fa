#include "qwalk/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qwalk;

TEST(CharPoly, HandComputedExamples) {
    // Q(K2) -> x^2 - 2x
    EXPECT_EQ(char_poly(IntMatrix(2, {1, 1, 1, 1})), Polynomial({0, -2, 1}));
    // Q(K3) -> (x - 4)(x - 1)^2
    EXPECT_EQ(char_poly(IntMatrix(3, {2, 1, 1, 1, 2, 1, 1, 1, 2})), Polynomial({-4, 9, -6, 1}));
    EXPECT_EQ(char_poly(IntMatrix(3)), Polynomial({0, 0, 0, 1}));
    EXPECT_EQ(char_poly(IntMatrix(0)), Polynomial::constant(1));
}

TEST(CharPoly, MatchesCofactorExpansionOnRandomMatrices) {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            for (bool symmetric : {true, false}) {
                IntMatrix m = oracle::random_int_matrix(rng, n, symmetric);
                Polynomial p = char_poly(m);
                EXPECT_EQ(p, oracle::char_poly_by_cofactors(m));
                EXPECT_TRUE(p.is_monic());
                EXPECT_TRUE(p.has_integer_coefficients());
                EXPECT_EQ(p.degree(), static_cast<int>(n));
            }
        }
}

TEST(SumAdjugateRatio, HandComputedExamples) {
    const Polynomial x = Polynomial::identity();
    // Q(K2) -> 2/(x - 2)
    EXPECT_EQ(sum_adjugate_ratio(IntMatrix(2, {1, 1, 1, 1})),
              RationalFunction(Polynomial::constant(2), Polynomial({-2, 1})));
    // Q(P3) -> (3x - 1)/(x^2 - 3x)
    EXPECT_EQ(sum_adjugate_ratio(IntMatrix(3, {1, 1, 0, 1, 2, 1, 0, 1, 1})),
              RationalFunction(Polynomial({-1, 3}), Polynomial({0, -3, 1})));
    // 1x1 zero -> 1/x
    EXPECT_EQ(sum_adjugate_ratio(IntMatrix(1)), RationalFunction(Polynomial::constant(1), x));
}

TEST(SumAdjugateRatio, MatchesCofactorInverseOnRandomSymmetricMatrices) {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix m = oracle::random_int_matrix(rng, n, true);
            EXPECT_EQ(sum_adjugate_ratio(m), oracle::inverse_entry_sum_by_cofactors(m));
        }
}

TEST(IntMatrix, ProductsAndSums) {
    IntMatrix q(3, {1, 1, 0, 1, 2, 1, 0, 1, 1});
    IntMatrix q2 = q * q;
    EXPECT_EQ(q2, IntMatrix(3, {2, 3, 1, 3, 6, 3, 1, 3, 2}));
    EXPECT_EQ(q2.sum(), 24);
    EXPECT_EQ(q.trace(), 4);
    EXPECT_TRUE(q.is_symmetric());
    EXPECT_THROW(q * IntMatrix(2), std::invalid_argument);
    EXPECT_THROW(IntMatrix(2, {1, 2, 3}), std::invalid_argument);
}
