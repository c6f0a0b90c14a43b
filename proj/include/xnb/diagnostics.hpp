#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xnb/dataset.hpp"

namespace xnb {

struct ShapiroWilkResult {
    double w = 0.0;
    double p = 0.0;
};

/// Shapiro-Wilk W and p-value using Royston's approximation (algorithm AS R94),
/// valid for 3 <= n <= 5000. Throws std::invalid_argument outside that range or
/// when all values are identical.
ShapiroWilkResult shapiro_wilk(std::span<const double> values);

struct VariableNormality {
    std::size_t variable = 0;
    double w = 0.0;
    double p = 0.0;
    bool rejected = false;
    bool zero_variance = false;
};

struct NormalityScan {
    double alpha = 0.05;
    std::size_t tested = 0;
    std::size_t rejected = 0;       // includes zero-variance variables
    std::size_t zero_variance = 0;  // counted as non-normal
    double rejection_ratio = 0.0;
    std::vector<VariableNormality> rows;
};

// Fraction of variables with p < alpha. Requires 3 <= n <= 5000.
NormalityScan normality_scan(const Dataset& d, double alpha = 0.05, std::size_t jobs = 0);

// Each value minus its class mean.
std::vector<double> within_class_residuals(std::span<const double> values,
                                           std::span<const std::size_t> class_ids);
std::vector<double> within_class_residuals(std::span<const double> values,
                                           std::span<const std::string> labels);

// Pearson correlation, clamped to [-1, 1]. NaN when either vector has zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

// Two-sided p-value of t = r * sqrt((n - 2) / (1 - r^2)) against Student's t with n - 2 df.
double correlation_p_value(double r, std::size_t n);

struct CiScanConfig {
    double p_max = 1e-6;
    double r_min = 0.7;
    std::optional<std::size_t> max_pairs = 200'000;  // nullopt: always exhaustive
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
};

struct FlaggedPair {
    std::size_t a = 0;
    std::size_t b = 0;
    double r = 0.0;
    double p = 0.0;
};

struct CiScan {
    CiScanConfig config;
    std::uint64_t total_pairs = 0;
    std::uint64_t examined_pairs = 0;
    std::uint64_t skipped_pairs = 0;  // a member had zero residual variance
    std::size_t zero_variance_variables = 0;
    bool sampled = false;
    std::vector<FlaggedPair> flagged;
    std::vector<std::size_t> flagged_partners;  // per variable
    std::size_t dependent_variables = 0;
    double dependent_ratio = 0.0;
};

/// Pairwise test of conditional independence given the class: correlation of
/// within-class residuals. A pair is flagged when p < p_max and |r| > r_min; the
/// ratio is the fraction of variables in at least one flagged pair. When the
/// pair count exceeds max_pairs, a seeded uniform sample of distinct pairs is
/// examined instead and the result is marked as sampled.
CiScan conditional_independence_scan(const Dataset& d, const CiScanConfig& config = {});

struct DiagnosticsReport {
    NormalityScan normality;
    CiScan independence;
};

std::string to_json(const DiagnosticsReport& report, const Dataset& d, bool include_rows = true);
// One line: SW and P ratios in the layout of a dataset-characterization table.
std::string summary_line(const DiagnosticsReport& report, const Dataset& d);

}  // namespace xnb
