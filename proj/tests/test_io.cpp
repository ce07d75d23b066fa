#include "qwalk/io.hpp"
#include "qwalk/population.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qwalk;

TEST(Json, PolynomialSchema) {
    const auto j = to_json(Polynomial({0, -2, 1}));
    EXPECT_EQ(j.dump(), R"({"coeffs":["0","-2","1"],"var":"lambda"})");
    EXPECT_EQ(to_json(Polynomial(), "t").dump(), R"({"coeffs":[],"var":"t"})");
}

TEST(Json, RationalFunctionAndWalkCountsSchema) {
    const RationalFunction r(Polynomial::constant(2), Polynomial({-2, 1}));
    EXPECT_EQ(to_json(r)["num"]["coeffs"], nlohmann::json::array({"2"}));
    EXPECT_EQ(to_json(r)["den"]["coeffs"], nlohmann::json::array({"-2", "1"}));
    const WalkCounts w = walk_counts_via_power(generators::path(3), 2);
    EXPECT_EQ(to_json(w).dump(), R"({"counts":["3","8","24"],"n":3})");
}

TEST(Json, BigValuesSurviveRoundTrip) {
    // N_200 of K_5 = 5 * 8^200 does not fit any machine integer
    const WalkCounts w = walk_counts_via_power(generators::complete(5), 200);
    EXPECT_EQ(walk_counts_from_json(nlohmann::json::parse(to_json(w).dump())), w);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> cs(rng() % 6 + 1);
        for (auto& q : cs) q = oracle::reduced(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 7 + 1));
        const Polynomial p(cs);
        const Polynomial d = Polynomial::linear(1, Rational(static_cast<long>(rng() % 5)));
        const RationalFunction r(p, d);
        EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())), p);
        EXPECT_EQ(rational_function_from_json(nlohmann::json::parse(to_json(r).dump())), r);
    }
}

TEST(Json, RejectsMalformedCoefficients) {
    EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"coeffs":["1/0"]})")), std::invalid_argument);
    EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"coeffs":["abc"]})")), std::invalid_argument);
}

TEST(Json, MultiplicityReport) {
    const auto j = to_json(verify_multiplicity_bound(generators::complete(3)));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["s"], 2);
    EXPECT_EQ(j[0]["t_range_ok"], true);
    EXPECT_EQ(j[0]["factor"]["coeffs"], nlohmann::json::array({"-1", "1"}));
}
