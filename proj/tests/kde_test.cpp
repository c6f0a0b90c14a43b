#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "support/oracles.hpp"
#include "xnb/kde.hpp"
#include "xnb/rng.hpp"

namespace xnb {
namespace {

constexpr KernelKind kAllKernels[] = {KernelKind::uniform, KernelKind::epanechnikov, KernelKind::biweight,
                                      KernelKind::triweight, KernelKind::gaussian};

TEST(Kernel, PointValues) {
    EXPECT_NEAR(kernel_eval(KernelKind::gaussian, 0.0), 0.3989422804, 1e-10);
    EXPECT_DOUBLE_EQ(kernel_eval(KernelKind::epanechnikov, 0.0), 0.75);
    EXPECT_EQ(kernel_eval(KernelKind::uniform, 1.5), 0.0);
    EXPECT_DOUBLE_EQ(kernel_eval(KernelKind::triweight, 0.0), 35.0 / 32.0);
    EXPECT_DOUBLE_EQ(kernel_eval(KernelKind::uniform, 1.0), 0.5);
    EXPECT_EQ(kernel_eval(KernelKind::biweight, -1.0001), 0.0);
}

TEST(Kernel, BetaCoefficientsMatchClosedForm) {
    EXPECT_EQ(kernel_coefficient(KernelKind::uniform), 0.5);
    EXPECT_EQ(kernel_coefficient(KernelKind::epanechnikov), 0.75);
    EXPECT_EQ(kernel_coefficient(KernelKind::biweight), 15.0 / 16.0);
    EXPECT_EQ(kernel_coefficient(KernelKind::triweight), 35.0 / 32.0);
    for (auto kind : {KernelKind::uniform, KernelKind::epanechnikov, KernelKind::biweight, KernelKind::triweight}) {
        EXPECT_EQ(kernel_eval(kind, 0.0), kernel_coefficient(kind)) << to_string(kind);
    }
}

TEST(Kernel, IntegratesToOneWithZeroFirstMoment) {
    for (auto kind : kAllKernels) {
        const double r = kind == KernelKind::gaussian ? 12.0 : 1.0;
        const auto k = [kind](double u) { return kernel_eval(kind, u); };
        const auto xk = [kind](double u) { return u * kernel_eval(kind, u); };
        EXPECT_NEAR(testing::simpson(k, -r, r, 20000), 1.0, 1e-6) << to_string(kind);
        EXPECT_NEAR(testing::simpson(xk, -r, r, 20000), 0.0, 1e-9) << to_string(kind);
    }
}

TEST(Kernel, ParseTokens) {
    EXPECT_EQ(parse_kernel("epanechnikov"), KernelKind::epanechnikov);
    EXPECT_EQ(parse_bandwidth_rule("silverman-adaptive"), BandwidthRule::silverman_adaptive);
    EXPECT_THROW(parse_kernel("cosine"), std::invalid_argument);
    EXPECT_THROW(parse_bandwidth_rule("isj"), std::invalid_argument);
    for (auto kind : kAllKernels) EXPECT_EQ(parse_kernel(to_string(kind)), kind);
}

TEST(Bandwidth, FormulaExamples) {
    EXPECT_DOUBLE_EQ(bandwidth_formula(BandwidthRule::scott, 1.0, 0.0, 1), 3.49);
    EXPECT_NEAR(bandwidth_formula(BandwidthRule::silverman, 2.0, 0.0, 32), 1.059, 1e-12);
    EXPECT_NEAR(bandwidth_formula(BandwidthRule::silverman_adaptive, 1.0, 1.34, 1), 0.9, 1e-15);
    // Smaller robust spread wins.
    EXPECT_NEAR(bandwidth_formula(BandwidthRule::silverman_adaptive, 1.0, 0.67, 1), 0.45, 1e-15);
}

TEST(Bandwidth, ConstantValuesFallBack) {
    const std::vector<double> constant{5, 5, 5};
    for (auto rule : {BandwidthRule::scott, BandwidthRule::silverman, BandwidthRule::silverman_adaptive}) {
        const double h = bandwidth(rule, constant);
        EXPECT_GT(h, 0.0);
        EXPECT_DOUBLE_EQ(h, 1e-9);
        EXPECT_DOUBLE_EQ(bandwidth(rule, constant, 40.0), 0.04);
    }
    EXPECT_DOUBLE_EQ(bandwidth(BandwidthRule::silverman, std::vector<double>{2.0}, 10.0), 0.01);
    EXPECT_THROW(bandwidth(BandwidthRule::silverman, std::vector<double>{}), std::invalid_argument);
}

TEST(Bandwidth, SampleStatistics) {
    const std::vector<double> v{1, 2, 3, 4, 5};
    EXPECT_NEAR(sample_sd(v), std::sqrt(2.5), 1e-15);
    EXPECT_DOUBLE_EQ(sample_iqr(v), 2.0);  // quartiles at positions 1 and 3
    EXPECT_DOUBLE_EQ(sample_iqr(std::vector<double>{0, 10}), 5.0);
    EXPECT_EQ(sample_sd(std::vector<double>{7}), 0.0);
}

TEST(Bandwidth, AdaptiveWithZeroIqrFallsBack) {
    // sd > 0 but IQR = 0 makes the robust spread zero.
    const std::vector<double> v{0, 0, 0, 0, 0, 0, 0, 10};
    EXPECT_DOUBLE_EQ(bandwidth(BandwidthRule::silverman_adaptive, v), 1e-2);
}

TEST(FitKde, ExamplesAndErrors) {
    const KdeModel single(std::vector<double>{0.0}, 1.0, KernelKind::gaussian);
    EXPECT_EQ(single.size(), 1u);
    const std::vector<double> flat{3, 3, 3, 3};
    EXPECT_DOUBLE_EQ(fit_kde(flat, KernelKind::gaussian, BandwidthRule::silverman).bandwidth(), 1e-9);
    EXPECT_THROW(fit_kde(std::vector<double>{}, KernelKind::gaussian, BandwidthRule::scott), std::invalid_argument);
    EXPECT_THROW(KdeModel({1.0}, 0.0, KernelKind::gaussian), std::invalid_argument);

    Rng rng(100);
    std::vector<double> draws(100);
    for (double& x : draws) x = rng.normal();
    const auto model = fit_kde(draws, KernelKind::gaussian, BandwidthRule::silverman);
    double mean = 0.0;
    for (double x : draws) mean += x;
    mean /= 100.0;
    double ss = 0.0;
    for (double x : draws) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / 99.0);
    EXPECT_NEAR(model.bandwidth(), 1.059 * sd * std::pow(100.0, -0.2), 1e-12);
}

TEST(KdeDensity, Examples) {
    const KdeModel one({0.0}, 1.0, KernelKind::gaussian);
    EXPECT_NEAR(one.density_at(0.0), 0.3989422804, 1e-10);
    const KdeModel two({-1.0, 1.0}, 1.0, KernelKind::gaussian);
    EXPECT_NEAR(two.density_at(0.0), 0.2419707245, 1e-10);
}

TEST(KdeDensity, SymmetricSamplesGiveSymmetricDensity) {
    Rng rng(3);
    for (auto kind : kAllKernels) {
        std::vector<double> samples;
        for (int i = 0; i < 15; ++i) {
            const double x = rng.normal();
            samples.push_back(x);
            samples.push_back(-x);
        }
        const KdeModel model(samples, 0.7, kind);
        for (int i = 0; i < 50; ++i) {
            const double x = 3.0 * rng.normal();
            EXPECT_NEAR(model.density_at(x), model.density_at(-x), 1e-12);
        }
    }
}

TEST(KdeDensity, MatchesDirectOracle) {
    Rng rng(8);
    std::vector<double> samples(37);
    for (double& x : samples) x = rng.normal(2.0, 3.0);
    const KdeModel model(samples, 0.8, KernelKind::gaussian);
    for (int i = 0; i < 100; ++i) {
        const double x = rng.normal(2.0, 5.0);
        EXPECT_NEAR(model.density_at(x), testing::gaussian_kde_oracle(samples, 0.8, x), 1e-14);
    }
}

TEST(KdeDensity, NonNegativeAndIntegratesToOne) {
    Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const auto kind = kAllKernels[trial % 5];
        const std::size_t n = 1 + rng.uniform_index(40);
        std::vector<double> samples(n);
        for (double& x : samples) x = rng.normal(0.0, 1.0 + 4.0 * rng.uniform01());
        const double h = 0.05 + 2.0 * rng.uniform01();
        const KdeModel model(samples, h, kind);
        const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
        const double integral = testing::trapezoid([&](double x) { return model.density_at(x); }, *lo - 10 * h,
                                                   *hi + 10 * h, 10000);
        EXPECT_NEAR(integral, 1.0, 1e-3) << to_string(kind) << " h=" << h;
        for (int i = 0; i < 20; ++i) EXPECT_GE(model.density_at(rng.normal(0.0, 10.0)), 0.0);
    }
}

TEST(Grid, LinearSpacingAndDefaults) {
    const std::vector<double> values{10, 0, 3, 7.5};
    EXPECT_EQ(make_grid(values, 5), (std::vector<double>{0, 2.5, 5, 7.5, 10}));
    EXPECT_EQ(make_grid(values).size(), 50u);
    EXPECT_EQ(kDefaultGridPoints, 50u);
    EXPECT_THROW(make_grid(values, 1), std::invalid_argument);
}

TEST(Grid, ConstantVariableIsWidened) {
    const auto grid = make_grid(std::vector<double>{4, 4, 4}, 3);
    EXPECT_EQ(grid, (std::vector<double>{3, 4, 5}));
}

TEST(Grid, KdeOnGridMatchesPointEvaluationExactly) {
    Rng rng(1);
    std::vector<double> samples(30);
    for (double& x : samples) x = rng.normal();
    const auto model = fit_kde(samples, KernelKind::gaussian, BandwidthRule::silverman);
    const auto grid = make_grid(samples, 50);
    const auto dens = kde_on_grid(model, grid);
    ASSERT_EQ(dens.size(), 50u);
    double total = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(dens[i], model.density_at(grid[i]));
        EXPECT_GE(dens[i], 0.0);
        total += dens[i];
    }
    EXPECT_GT(total, 0.0);
}

}  // namespace
}  // namespace xnb
