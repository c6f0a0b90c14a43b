#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xnb/classifier.hpp"
#include "xnb/dataset.hpp"

namespace xnb {

enum class Method { gnb, fnb, xnb };

std::string_view to_string(Method method);
Method parse_method(std::string_view token);
// Comma-separated list, e.g. "gnb,xnb".
std::vector<Method> parse_methods(std::string_view list);

double accuracy(std::span<const std::string> predicted, std::span<const std::string> truth);

struct EvaluationConfig {
    std::size_t folds = 10;
    std::uint64_t seed = 0;
    XnbConfig model;
};

struct MethodResult {
    Method method = Method::xnb;
    std::vector<double> fold_accuracy;
    double mean_accuracy = 0.0;
    // Variables used per class in each fold: fold_class_counts[fold][class].
    std::vector<std::vector<std::size_t>> fold_class_counts;
    std::vector<double> fold_mean_count;  // mean over classes, per fold
    double mean_count = 0.0;              // mean over folds of fold_mean_count
};

struct EvaluationTimings {
    StageTimings xnb;
    StageTimings fnb;
    double gnb_fit = 0.0;
    double predict = 0.0;
};

struct EvaluationReport {
    static constexpr int kSchemaVersion = 1;

    int schema_version = kSchemaVersion;
    std::string fold_generator;
    EvaluationConfig config;
    std::size_t samples = 0;
    std::size_t variables = 0;
    std::vector<std::string> classes;
    std::vector<MethodResult> methods;
    EvaluationTimings timings;

    const MethodResult& result(Method method) const;
};

/// Stratified k-fold cross-validation of the requested methods. Every method
/// sees the same folds. A fold whose fit fails is rethrown with its index.
EvaluationReport evaluate_cv(const Dataset& d, std::span<const Method> methods,
                             const EvaluationConfig& config = {});

enum class ReportFormat { json, tsv };

ReportFormat parse_report_format(std::string_view token);

// TSV: one row per method with mean accuracy and mean variable count. JSON: full detail.
void emit_report(const EvaluationReport& report, ReportFormat format, std::ostream& out);
std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(std::string_view text);

}  // namespace xnb
