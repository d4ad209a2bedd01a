#include <gtest/gtest.h>

#include "rift/sweeps.hpp"

namespace {

using namespace rift;

void expect_same(const SweepReport& a, const SweepReport& b)
{
    EXPECT_EQ(a.family, b.family);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.failed, b.failed);
    EXPECT_EQ(a.indeterminate, b.indeterminate);
    EXPECT_EQ(a.first_failure, b.first_failure);
    EXPECT_EQ(a.counterexample, b.counterexample);
}

TEST(Sweeps, ResultsDoNotDependOnJobs)
{
    for (const char* family : {"thm1", "thm3", "thm4", "cb-oracle", "geo-oracle"}) {
        SweepOptions one;
        one.box_w = 3;
        one.box_h = 2;
        one.max_v = 5;
        one.count = 30;
        SweepOptions three = one;
        three.jobs = 3;
        auto a = run_sweep(family, one);
        auto b = run_sweep(family, three);
        ASSERT_TRUE(a && b) << family;
        EXPECT_GT(a->cases, 0u) << family;
        EXPECT_EQ(a->cases, a->passed + a->failed + a->indeterminate) << family;
        expect_same(*a, *b);
    }
}

TEST(Sweeps, SeedsChangeRandomFamilies)
{
    SweepOptions a;
    a.count = 20;
    SweepOptions b = a;
    b.seed = 2;
    EXPECT_TRUE(run_sweep("cb-oracle", a)->ok());
    EXPECT_TRUE(run_sweep("cb-oracle", b)->ok());
}

TEST(Sweeps, UnknownFamily)
{
    EXPECT_FALSE(run_sweep("thm9", SweepOptions{}));
}

TEST(Sweeps, DominoIsTheFirstTileTrialCounterexample)
{
    SweepOptions small;
    small.box_w = 2;
    small.box_h = 1;
    small.max_v = 2;
    auto report = sweep_thm1(small);
    EXPECT_EQ(report.cases, 1u);
    EXPECT_EQ(report.failed, 1u);
    EXPECT_FALSE(report.counterexample.empty());
}

TEST(Sweeps, BudgetExhaustionIsIndeterminate)
{
    SweepOptions tight;
    tight.box_w = 3;
    tight.box_h = 2;
    tight.max_v = 6;
    tight.budget = 1;
    auto report = sweep_thm1(tight);
    EXPECT_GT(report.indeterminate, 0u);
    EXPECT_FALSE(report.ok());
}

}  // namespace
