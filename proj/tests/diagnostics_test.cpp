#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <json.hpp>

#include "data/shapiro_reference.hpp"
#include "support/synthetic.hpp"
#include "xnb/diagnostics.hpp"
#include "xnb/rng.hpp"

namespace xnb {
namespace {

TEST(ShapiroWilk, MatchesReferenceImplementation) {
    for (const auto& ref : testing::shapiro_reference_cases()) {
        const auto result = shapiro_wilk(ref.values);
        EXPECT_NEAR(result.w, ref.w, 1e-9) << ref.name;
        EXPECT_NEAR(result.p, ref.p, std::max(1e-9, 1e-6 * ref.p)) << ref.name;
    }
}

TEST(ShapiroWilk, NormalAndExponentialDraws) {
    Rng rng(2024);
    std::vector<double> normal(200);
    std::vector<double> expo(200);
    for (double& x : normal) x = rng.normal();
    for (double& x : expo) x = rng.exponential(1.0);
    EXPECT_GT(shapiro_wilk(normal).p, 0.05);
    EXPECT_LT(shapiro_wilk(expo).p, 0.001);
}

TEST(ShapiroWilk, Errors) {
    EXPECT_THROW(shapiro_wilk(std::vector<double>{1, 2}), std::invalid_argument);
    EXPECT_THROW(shapiro_wilk(std::vector<double>{3, 3, 3, 3}), std::invalid_argument);
    EXPECT_THROW(shapiro_wilk(std::vector<double>(5001, 1.0)), std::invalid_argument);
}

TEST(ShapiroWilk, ScaleAndLocationInvariant) {
    Rng rng(9);
    for (std::size_t n : {3u, 7u, 11u, 12u, 40u, 300u}) {
        std::vector<double> x(n);
        for (double& v : x) v = rng.normal() + (rng.uniform01() < 0.2 ? rng.exponential(0.5) : 0.0);
        const auto base = shapiro_wilk(x);
        for (auto [a, b] : {std::pair{3.5, -2.0}, std::pair{0.01, 1000.0}, std::pair{250.0, 7.0}}) {
            std::vector<double> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b;
            EXPECT_NEAR(shapiro_wilk(y).w, base.w, 1e-10) << "n=" << n;
        }
        EXPECT_GT(base.w, 0.0);
        EXPECT_LE(base.w, 1.0);
        EXPECT_GE(base.p, 0.0);
        EXPECT_LE(base.p, 1.0);
    }
}

TEST(NormalityScan, CountsZeroVarianceAsRejected) {
    const auto d = testing::from_rows({{1, 4, 0.1}, {1, 2, 0.5}, {1, 3, 0.2}, {1, 5, 0.3}, {1, 1, 0.9}},
                                      {"A", "A", "B", "B", "B"});
    const auto scan = normality_scan(d, 0.05, 1);
    EXPECT_EQ(scan.tested, 3u);
    EXPECT_EQ(scan.zero_variance, 1u);
    EXPECT_TRUE(scan.rows[0].rejected);
    EXPECT_TRUE(scan.rows[0].zero_variance);
    EXPECT_FALSE(scan.rows[1].rejected);
    EXPECT_DOUBLE_EQ(scan.rejection_ratio, static_cast<double>(scan.rejected) / 3.0);
}

TEST(Residuals, Examples) {
    const std::vector<double> values{1, 2, 10, 20};
    const std::vector<std::string> labels{"A", "A", "B", "B"};
    EXPECT_EQ(within_class_residuals(values, labels), (std::vector<double>{-0.5, 0.5, -5, 5}));
    const std::vector<std::string> one(4, "A");
    EXPECT_EQ(within_class_residuals(values, one), (std::vector<double>{-7.25, -6.25, 1.75, 11.75}));
    const std::vector<double> means{3, 3, 8, 8};
    for (double r : within_class_residuals(means, labels)) EXPECT_EQ(r, 0.0);
}

TEST(Residuals, SumToZeroWithinClass) {
    Rng rng(77);
    std::vector<double> values(300);
    std::vector<std::size_t> ids(300);
    for (std::size_t i = 0; i < 300; ++i) {
        ids[i] = rng.uniform_index(4);
        values[i] = rng.normal(1e4 * static_cast<double>(ids[i]), 50.0);
    }
    const auto res = within_class_residuals(values, ids);
    std::vector<double> sums(4, 0.0);
    std::vector<double> counts(4, 0.0);
    for (std::size_t i = 0; i < 300; ++i) {
        sums[ids[i]] += res[i];
        counts[ids[i]] += 1.0;
    }
    for (std::size_t c = 0; c < 4; ++c) EXPECT_LE(std::abs(sums[c]), 1e-9 * counts[c] * 3e4);
}

TEST(Pearson, BoundsAndDegenerate) {
    const std::vector<double> a{1, 2, 3, 4};
    const std::vector<double> b{2, 4, 6, 8};
    const std::vector<double> c{8, 6, 4, 2};
    EXPECT_DOUBLE_EQ(pearson(a, b), 1.0);
    EXPECT_DOUBLE_EQ(pearson(a, c), -1.0);
    EXPECT_TRUE(std::isnan(pearson(a, std::vector<double>{5, 5, 5, 5})));
    EXPECT_DOUBLE_EQ(correlation_p_value(1.0, 10), 0.0);
    EXPECT_DOUBLE_EQ(correlation_p_value(0.0, 10), 1.0);
    // r = 0.5, n = 10: t = 0.5 * sqrt(8 / 0.75), two-sided p from Student t with 8 df.
    EXPECT_NEAR(correlation_p_value(0.5, 10), 0.14111328125, 1e-12);
}

TEST(CiScan, PerfectDependenceIsFlagged) {
    Rng rng(3);
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (int i = 0; i < 40; ++i) {
        const double z = rng.normal();
        const bool a = i % 2 == 0;
        rows.push_back({z + (a ? 0.0 : 5.0), z + (a ? 0.0 : 5.0), rng.normal()});
        labels.push_back(a ? "A" : "B");
    }
    const auto scan = conditional_independence_scan(testing::from_rows(rows, labels));
    ASSERT_EQ(scan.flagged.size(), 1u);
    EXPECT_EQ(scan.flagged[0].a, 0u);
    EXPECT_EQ(scan.flagged[0].b, 1u);
    EXPECT_NEAR(scan.flagged[0].r, 1.0, 1e-12);
    EXPECT_EQ(scan.dependent_variables, 2u);
    EXPECT_DOUBLE_EQ(scan.dependent_ratio, 2.0 / 3.0);
    EXPECT_FALSE(scan.sampled);
}

TEST(CiScan, IndependentNoiseIsNotFlagged) {
    const auto d = testing::shifted_gaussians(200, 46, 2, 2, 3.0, 8).data;
    const auto scan = conditional_independence_scan(d);
    EXPECT_EQ(scan.examined_pairs, 46u * 45u / 2u);
    EXPECT_TRUE(scan.flagged.empty());
    EXPECT_EQ(scan.dependent_ratio, 0.0);
}

TEST(CiScan, ZeroVarianceResidualsSkipPairs) {
    const auto d = testing::from_rows({{1, 1, 0.5}, {2, 1, 0.1}, {3, 2, 0.9}, {4, 2, 0.2}},
                                      {"A", "A", "B", "B"});
    const auto scan = conditional_independence_scan(d);
    EXPECT_EQ(scan.zero_variance_variables, 1u);
    EXPECT_EQ(scan.skipped_pairs, 2u);
    EXPECT_EQ(scan.examined_pairs, 1u);
}

TEST(CiScan, SamplingWithFullCapEqualsExhaustive) {
    const auto d = testing::shifted_gaussians(60, 30, 3, 2, 2.0, 5).data;
    CiScanConfig exhaustive;
    exhaustive.max_pairs.reset();
    exhaustive.r_min = 0.2;
    exhaustive.p_max = 0.5;
    CiScanConfig capped = exhaustive;
    capped.max_pairs = 30 * 29 / 2;
    const auto a = conditional_independence_scan(d, exhaustive);
    const auto b = conditional_independence_scan(d, capped);
    EXPECT_FALSE(b.sampled);
    EXPECT_EQ(a.flagged.size(), b.flagged.size());
    EXPECT_EQ(a.flagged_partners, b.flagged_partners);
    EXPECT_EQ(a.dependent_ratio, b.dependent_ratio);
}

TEST(CiScan, SampledScanExaminesDistinctPairsDeterministically) {
    const auto d = testing::shifted_gaussians(40, 50, 2, 2, 2.0, 6).data;
    CiScanConfig cfg;
    cfg.max_pairs = 100;
    cfg.seed = 4;
    cfg.r_min = 0.0;
    cfg.p_max = 1.0;
    const auto a = conditional_independence_scan(d, cfg);
    const auto b = conditional_independence_scan(d, cfg);
    EXPECT_TRUE(a.sampled);
    EXPECT_EQ(a.examined_pairs, 100u);
    EXPECT_EQ(a.total_pairs, 50u * 49u / 2u);
    ASSERT_EQ(a.flagged.size(), b.flagged.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < a.flagged.size(); ++i) {
        EXPECT_EQ(a.flagged[i].a, b.flagged[i].a);
        EXPECT_EQ(a.flagged[i].b, b.flagged[i].b);
        EXPECT_LT(a.flagged[i].a, a.flagged[i].b);
        seen.insert({a.flagged[i].a, a.flagged[i].b});
    }
    EXPECT_EQ(seen.size(), a.flagged.size());
}

TEST(Report, JsonAndSummary) {
    const auto d = testing::shifted_gaussians(30, 5, 2, 1, 2.0, 1).data;
    DiagnosticsReport report{normality_scan(d, 0.05, 1), conditional_independence_scan(d)};
    const auto j = nlohmann::json::parse(to_json(report, d));
    EXPECT_EQ(j.at("schema_version").get<int>(), 1);
    EXPECT_FALSE(summary_line(report, d).empty());
}

}  // namespace
}  // namespace xnb
