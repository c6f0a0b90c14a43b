#include "xnb/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "xnb/error.hpp"
#include "xnb/log.hpp"
#include "xnb/rng.hpp"

namespace xnb {
namespace {

using nlohmann::json;

double mean_of(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json timings_to_json(const StageTimings& t) {
    return json{{"bandwidth", t.bandwidth}, {"kde", t.kde}, {"hellinger", t.hellinger},
                {"select", t.select},       {"build", t.build}};
}

StageTimings timings_from_json(const json& j) {
    StageTimings t;
    t.bandwidth = j.at("bandwidth").get<double>();
    t.kde = j.at("kde").get<double>();
    t.hellinger = j.at("hellinger").get<double>();
    t.select = j.at("select").get<double>();
    t.build = j.at("build").get<double>();
    return t;
}

// Class counts of a fitted model, reported against the full dataset's class list.
std::vector<std::size_t> counts_for(const XnbModel& model, const std::vector<std::string>& all_classes) {
    std::vector<std::size_t> counts(all_classes.size(), 0);
    for (std::size_t c = 0; c < model.classes().size(); ++c) {
        const auto it = std::find(all_classes.begin(), all_classes.end(), model.classes()[c]);
        counts[static_cast<std::size_t>(it - all_classes.begin())] = model.class_densities(c).variables.size();
    }
    return counts;
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::gnb: return "gnb";
        case Method::fnb: return "fnb";
        case Method::xnb: return "xnb";
    }
    return "unknown";
}

Method parse_method(std::string_view token) {
    for (auto m : {Method::gnb, Method::fnb, Method::xnb}) {
        if (token == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown method '" + std::string(token) + "' (expected gnb, fnb or xnb)");
}

std::vector<Method> parse_methods(std::string_view list) {
    std::vector<Method> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto token = list.substr(0, comma);
        if (!token.empty()) {
            const Method m = parse_method(token);
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    if (out.empty()) throw std::invalid_argument("no evaluation methods given");
    return out;
}

double accuracy(std::span<const std::string> predicted, std::span<const std::string> truth) {
    if (predicted.size() != truth.size()) throw std::invalid_argument("accuracy: length mismatch");
    if (predicted.empty()) throw std::invalid_argument("accuracy: empty input");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) hits += predicted[i] == truth[i] ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

const MethodResult& EvaluationReport::result(Method method) const {
    for (const auto& r : methods) {
        if (r.method == method) return r;
    }
    throw std::out_of_range("report has no results for method " + std::string(to_string(method)));
}

EvaluationReport evaluate_cv(const Dataset& d, std::span<const Method> methods, const EvaluationConfig& config) {
    if (methods.empty()) throw std::invalid_argument("evaluate_cv: no methods");
    config.model.validate();
    std::size_t smallest = d.n_samples();
    for (std::size_t c = 0; c < d.n_classes(); ++c) smallest = std::min(smallest, d.class_size(c));
    if (config.folds > smallest) {
        log::warn("fold count " + std::to_string(config.folds) + " exceeds the smallest class size " +
                  std::to_string(smallest) + "; some folds miss that class");
    }
    const FoldPlan plan = stratified_kfold(d, config.folds, config.seed);

    EvaluationReport report;
    report.fold_generator = std::string(Rng::kAlgorithm);
    report.config = config;
    report.samples = d.n_samples();
    report.variables = d.n_variables();
    report.classes = d.classes();
    for (Method m : methods) {
        MethodResult r;
        r.method = m;
        report.methods.push_back(std::move(r));
    }

    for (std::size_t fold = 0; fold < plan.k; ++fold) {
        const auto train_rows = plan.train_rows(fold);
        const auto test_rows = plan.test_rows(fold);
        const Dataset train = d.subset(train_rows);
        std::vector<std::string> truth;
        for (std::size_t r : test_rows) truth.push_back(d.labels()[r]);

        for (auto& result : report.methods) {
            std::vector<std::string> predicted;
            predicted.reserve(test_rows.size());
            try {
                if (result.method == Method::gnb) {
                    const auto start = std::chrono::steady_clock::now();
                    const GnbModel model = fit_gnb(train);
                    report.timings.gnb_fit += seconds_since(start);
                    const auto pstart = std::chrono::steady_clock::now();
                    for (std::size_t r : test_rows) predicted.push_back(model.predict(d.row(r)).label);
                    report.timings.predict += seconds_since(pstart);
                    result.fold_class_counts.emplace_back(d.n_classes(), d.n_variables());
                } else {
                    FitReport fit;
                    const XnbModel model = result.method == Method::xnb ? fit_xnb(train, config.model, &fit)
                                                                        : fit_fnb(train, config.model, &fit);
                    (result.method == Method::xnb ? report.timings.xnb : report.timings.fnb) += fit.timings;
                    const auto pstart = std::chrono::steady_clock::now();
                    for (std::size_t r : test_rows) predicted.push_back(model.predict(d.row(r)).label);
                    report.timings.predict += seconds_since(pstart);
                    result.fold_class_counts.push_back(counts_for(model, d.classes()));
                }
            } catch (const std::exception& e) {
                throw DataError("fold " + std::to_string(fold) + " (" + std::string(to_string(result.method)) +
                                "): " + e.what());
            }
            result.fold_accuracy.push_back(accuracy(predicted, truth));
            const auto& counts = result.fold_class_counts.back();
            result.fold_mean_count.push_back(static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0})) /
                                             static_cast<double>(counts.size()));
        }
    }
    for (auto& result : report.methods) {
        result.mean_accuracy = mean_of(result.fold_accuracy);
        result.mean_count = mean_of(result.fold_mean_count);
    }
    return report;
}

ReportFormat parse_report_format(std::string_view token) {
    if (token == "json") return ReportFormat::json;
    if (token == "tsv") return ReportFormat::tsv;
    throw std::invalid_argument("unknown format '" + std::string(token) + "' (expected json or tsv)");
}

std::string report_to_json(const EvaluationReport& report) {
    json methods = json::array();
    for (const auto& r : report.methods) {
        methods.push_back({{"method", to_string(r.method)},
                           {"fold_accuracy", r.fold_accuracy},
                           {"mean_accuracy", r.mean_accuracy},
                           {"fold_class_counts", r.fold_class_counts},
                           {"fold_mean_count", r.fold_mean_count},
                           {"mean_count", r.mean_count}});
    }
    const auto& m = report.config.model;
    const json j{
        {"schema_version", report.schema_version},
        {"fold_generator", report.fold_generator},
        {"config",
         {{"folds", report.config.folds},
          {"seed", report.config.seed},
          {"kernel", to_string(m.kernel)},
          {"bandwidth", to_string(m.bandwidth)},
          {"mu", m.grid_points},
          {"theta", m.theta},
          {"probability_floor", m.probability_floor},
          {"jobs", m.jobs}}},
        {"samples", report.samples},
        {"variables", report.variables},
        {"classes", report.classes},
        {"methods", std::move(methods)},
        {"timings",
         {{"xnb", timings_to_json(report.timings.xnb)},
          {"fnb", timings_to_json(report.timings.fnb)},
          {"gnb_fit", report.timings.gnb_fit},
          {"predict", report.timings.predict}}}};
    return j.dump(2);
}

EvaluationReport report_from_json(std::string_view text) {
    const json j = json::parse(text);
    EvaluationReport report;
    report.schema_version = j.at("schema_version").get<int>();
    if (report.schema_version != EvaluationReport::kSchemaVersion) {
        throw std::invalid_argument("unsupported report schema_version " + std::to_string(report.schema_version));
    }
    report.fold_generator = j.at("fold_generator").get<std::string>();
    const json& c = j.at("config");
    report.config.folds = c.at("folds").get<std::size_t>();
    report.config.seed = c.at("seed").get<std::uint64_t>();
    report.config.model.kernel = parse_kernel(c.at("kernel").get<std::string>());
    report.config.model.bandwidth = parse_bandwidth_rule(c.at("bandwidth").get<std::string>());
    report.config.model.grid_points = c.at("mu").get<std::size_t>();
    report.config.model.theta = c.at("theta").get<double>();
    report.config.model.probability_floor = c.at("probability_floor").get<double>();
    report.config.model.jobs = c.at("jobs").get<std::size_t>();
    report.samples = j.at("samples").get<std::size_t>();
    report.variables = j.at("variables").get<std::size_t>();
    report.classes = j.at("classes").get<std::vector<std::string>>();
    for (const auto& mj : j.at("methods")) {
        MethodResult r;
        r.method = parse_method(mj.at("method").get<std::string>());
        r.fold_accuracy = mj.at("fold_accuracy").get<std::vector<double>>();
        r.mean_accuracy = mj.at("mean_accuracy").get<double>();
        r.fold_class_counts = mj.at("fold_class_counts").get<std::vector<std::vector<std::size_t>>>();
        r.fold_mean_count = mj.at("fold_mean_count").get<std::vector<double>>();
        r.mean_count = mj.at("mean_count").get<double>();
        report.methods.push_back(std::move(r));
    }
    const json& t = j.at("timings");
    report.timings.xnb = timings_from_json(t.at("xnb"));
    report.timings.fnb = timings_from_json(t.at("fnb"));
    report.timings.gnb_fit = t.at("gnb_fit").get<double>();
    report.timings.predict = t.at("predict").get<double>();
    return report;
}

void emit_report(const EvaluationReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        out << report_to_json(report) << '\n';
        return;
    }
    const auto flags = out.flags();
    out << "method\tmean_accuracy\tmean_vars\n";
    for (const auto& r : report.methods) {
        out << to_string(r.method) << '\t' << std::fixed << std::setprecision(3) << r.mean_accuracy << '\t'
            << std::setprecision(1) << r.mean_count << '\n';
    }
    out.flags(flags);
}

}  // namespace xnb
