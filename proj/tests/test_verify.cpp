#include "qwalk/verify.hpp"

#include <gtest/gtest.h>

using namespace qwalk;

namespace {

SweepOptions quick() {
    SweepOptions opt;
    opt.max_n = 5;
    opt.samples = 40;
    opt.threads = 2;
    return opt;
}

}  // namespace

TEST(Sweeps, EveryRegisteredSweepPassesOnASmallPopulation) {
    for (const auto& entry : sweep_registry()) {
        const SweepReport rep = entry.run(quick());
        EXPECT_EQ(rep.name, entry.name);
        EXPECT_GT(rep.checked, 0u) << entry.name;
        EXPECT_TRUE(rep.passed()) << entry.name << ": " << (rep.failures.empty() ? "" : rep.failures[0].graph6 + " " + rep.failures[0].detail);
    }
}

TEST(Sweeps, ReportsAreDeterministicAcrossThreadCounts) {
    SweepOptions one = quick(), four = quick();
    one.threads = 1;
    four.threads = 4;
    for (const char* name : {"walks", "prop2.1", "thm2.7"}) {
        const SweepReport a = run_sweep(name, one), b = run_sweep(name, four);
        EXPECT_EQ(a.checked, b.checked);
        EXPECT_EQ(a.failures.size(), b.failures.size());
    }
}

TEST(Sweeps, EdgeCoronaNotesReportBothReadings) {
    const SweepReport rep = run_sweep("thm2.9", quick());
    ASSERT_EQ(rep.notes.size(), 2u);
    EXPECT_NE(rep.notes[0].find("matches construction on 44 of 44"), std::string::npos) << rep.notes[0];
    EXPECT_EQ(rep.notes[1].find("matches construction on 44 of 44"), std::string::npos) << rep.notes[1];
}

TEST(Sweeps, UnknownNameThrows) { EXPECT_THROW(run_sweep("thm9.9", quick()), std::invalid_argument); }

TEST(ParallelChecks, CollectsExceptionsAsFailuresInIndexOrder) {
    auto results = parallel_checks(10, 3, [](std::size_t i) -> std::optional<std::string> {
        if (i == 7) throw std::runtime_error("boom");
        if (i % 4 == 1) return std::to_string(i);
        return std::nullopt;
    });
    ASSERT_EQ(results.size(), 10u);
    EXPECT_EQ(results[1], "1");
    EXPECT_EQ(results[5], "5");
    EXPECT_EQ(results[7], "exception: boom");
    EXPECT_FALSE(results[0].has_value());
}
