#include "xnb/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "xnb/error.hpp"
#include "xnb/hellinger.hpp"
#include "xnb/kde_bank.hpp"
#include "xnb/log.hpp"
#include "xnb/parallel.hpp"

namespace xnb {
namespace {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double seconds = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return seconds;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_classifiable(const Dataset& d) {
    if (d.n_classes() < 2) {
        throw DataError("classification needs at least 2 distinct classes, found " +
                        std::to_string(d.n_classes()));
    }
    for (std::size_t c = 0; c < d.n_classes(); ++c) {
        if (d.class_size(c) < 2) {
            log::warn("class '" + d.classes()[c] +
                      "' has a single sample; its densities use the fallback bandwidth");
        }
    }
}

void check_sample(std::span<const double> sample, std::size_t m) {
    if (sample.size() != m) {
        throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                    " values, model expects " + std::to_string(m));
    }
    for (double x : sample) {
        if (!std::isfinite(x)) throw std::invalid_argument("sample contains a non-finite value");
    }
}

Prediction make_prediction(std::vector<double> scores, std::span<const double> priors,
                           const std::vector<std::string>& classes,
                           std::vector<std::vector<std::size_t>> used) {
    Prediction p;
    p.class_index = argmax_with_tie_break(scores, priors);
    p.label = classes[p.class_index];
    p.log_scores = std::move(scores);
    p.used_features = std::move(used);
    return p;
}

XnbModel build_model(ModelKind kind, const Dataset& d, const XnbConfig& config,
                     const std::vector<std::vector<double>>& bandwidths,
                     const std::vector<std::vector<std::size_t>>& features) {
    std::vector<XnbModel::ClassDensities> per_class(d.n_classes());
    parallel_for(d.n_classes(), config.jobs, [&](std::size_t c) {
        auto& slot = per_class[c];
        slot.variables = features[c];
        slot.densities.reserve(features[c].size());
        for (std::size_t v : features[c]) {
            slot.densities.emplace_back(class_values(d, c, v), bandwidths[c][v], config.kernel);
        }
    });
    return XnbModel(kind, config, d.classes(), d.variable_names(), class_priors(d), std::move(per_class));
}

}  // namespace

void XnbConfig::validate() const {
    if (grid_points < 2) throw std::invalid_argument("grid points (mu) must be at least 2");
    SelectionConfig{theta}.validate();
    if (!(probability_floor > 0.0) || !std::isfinite(probability_floor)) {
        throw std::invalid_argument("probability floor must be finite and positive");
    }
}

StageTimings& StageTimings::operator+=(const StageTimings& other) {
    bandwidth += other.bandwidth;
    kde += other.kde;
    hellinger += other.hellinger;
    select += other.select;
    build += other.build;
    return *this;
}

std::size_t argmax_with_tie_break(std::span<const double> scores, std::span<const double> priors) {
    if (scores.empty() || scores.size() != priors.size()) {
        throw std::invalid_argument("argmax: scores and priors must be non-empty and aligned");
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c) {
        if (scores[c] > scores[best] || (scores[c] == scores[best] && priors[c] > priors[best])) {
            best = c;
        }
    }
    return best;
}

std::string_view to_string(ModelKind kind) {
    return kind == ModelKind::xnb ? "xnb" : "fnb";
}

XnbModel::XnbModel(ModelKind kind, XnbConfig config, std::vector<std::string> classes,
                   std::vector<std::string> variable_names, std::vector<double> priors,
                   std::vector<ClassDensities> per_class)
    : kind_(kind),
      config_(config),
      classes_(std::move(classes)),
      variable_names_(std::move(variable_names)),
      priors_(std::move(priors)),
      per_class_(std::move(per_class)) {
    if (classes_.empty() || priors_.size() != classes_.size() || per_class_.size() != classes_.size()) {
        throw std::invalid_argument("XnbModel: classes, priors and densities must be aligned");
    }
    for (const auto& pc : per_class_) {
        if (pc.variables.size() != pc.densities.size()) {
            throw std::invalid_argument("XnbModel: one density per selected variable required");
        }
        for (std::size_t v : pc.variables) {
            if (v >= variable_names_.size()) throw std::invalid_argument("XnbModel: variable out of range");
        }
    }
}

Prediction XnbModel::predict(std::span<const double> sample, std::size_t* density_evaluations) const {
    check_sample(sample, variable_names_.size());
    const double log_floor = std::log(config_.probability_floor);
    std::vector<double> scores(classes_.size());
    std::vector<std::vector<std::size_t>> used(classes_.size());
    std::size_t evaluations = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& pc = per_class_[c];
        double score = std::log(priors_[c]);
        for (std::size_t i = 0; i < pc.variables.size(); ++i) {
            const double f = pc.densities[i].density_at(sample[pc.variables[i]]);
            score += f > config_.probability_floor ? std::log(f) : log_floor;
        }
        evaluations += pc.variables.size();
        scores[c] = score;
        used[c] = pc.variables;
    }
    if (density_evaluations) *density_evaluations += evaluations;
    return make_prediction(std::move(scores), priors_, classes_, std::move(used));
}

XnbModel fit_xnb(const Dataset& d, const XnbConfig& config, FitReport* report) {
    config.validate();
    require_classifiable(d);
    Stopwatch watch;
    StageTimings t;

    const auto bandwidths = compute_bandwidths(d, config.bandwidth, config.jobs);
    t.bandwidth = watch.lap();
    const KdeBank bank = build_kde_bank(d, bandwidths, config.kernel, config.jobs);
    t.kde = watch.lap();
    const HellingerTable table = hellinger_table(d, bank, config.grid_points, config.jobs);
    t.hellinger = watch.lap();
    ClassFeatureMap selection = select_class_specific(table, SelectionConfig{config.theta}, config.jobs);
    t.select = watch.lap();

    std::vector<std::vector<std::size_t>> features(d.n_classes());
    for (std::size_t c = 0; c < d.n_classes(); ++c) features[c] = selection.variables(c);
    XnbModel model = build_model(ModelKind::xnb, d, config, bandwidths, features);
    t.build = watch.lap();

    if (report) {
        report->timings = t;
        report->zero_sum_fallbacks = table.zero_sum_fallbacks;
        report->selection = std::move(selection);
    }
    return model;
}

XnbModel fit_fnb(const Dataset& d, const XnbConfig& config, FitReport* report) {
    config.validate();
    require_classifiable(d);
    Stopwatch watch;
    StageTimings t;

    const auto bandwidths = compute_bandwidths(d, config.bandwidth, config.jobs);
    t.bandwidth = watch.lap();
    std::vector<std::size_t> all(d.n_variables());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::vector<std::vector<std::size_t>> features(d.n_classes(), all);
    XnbModel model = build_model(ModelKind::fnb, d, config, bandwidths, features);
    t.build = watch.lap();

    if (report) {
        report->timings = t;
        report->selection.reset();
    }
    return model;
}

GnbModel::GnbModel(std::vector<std::string> classes, std::vector<std::string> variable_names,
                   std::vector<double> priors, std::vector<std::vector<double>> means,
                   std::vector<std::vector<double>> variances, double variance_smoothing)
    : classes_(std::move(classes)),
      variable_names_(std::move(variable_names)),
      priors_(std::move(priors)),
      means_(std::move(means)),
      variances_(std::move(variances)),
      smoothing_(variance_smoothing) {
    const std::size_t k = classes_.size();
    if (k == 0 || priors_.size() != k || means_.size() != k || variances_.size() != k) {
        throw std::invalid_argument("GnbModel: per-class arrays must be aligned");
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (means_[c].size() != variable_names_.size() || variances_[c].size() != variable_names_.size()) {
            throw std::invalid_argument("GnbModel: one mean and variance per variable required");
        }
        for (double var : variances_[c]) {
            if (!(var > 0.0)) throw std::invalid_argument("GnbModel: variances must be positive");
        }
    }
}

Prediction GnbModel::predict(std::span<const double> sample) const {
    check_sample(sample, variable_names_.size());
    constexpr double log_two_pi = 1.8378770664093454836;
    std::vector<double> scores(classes_.size());
    std::vector<std::vector<std::size_t>> used(classes_.size());
    std::vector<std::size_t> all(variable_names_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        double score = std::log(priors_[c]);
        for (std::size_t v = 0; v < sample.size(); ++v) {
            const double var = variances_[c][v];
            const double diff = sample[v] - means_[c][v];
            score += -0.5 * (log_two_pi + std::log(var)) - diff * diff / (2.0 * var);
        }
        scores[c] = score;
        used[c] = all;
    }
    return make_prediction(std::move(scores), priors_, classes_, std::move(used));
}

GnbModel fit_gnb(const Dataset& d) {
    require_classifiable(d);
    const std::size_t k = d.n_classes();
    const std::size_t m = d.n_variables();
    std::vector<std::vector<double>> means(k, std::vector<double>(m, 0.0));
    std::vector<std::vector<double>> variances(k, std::vector<double>(m, 0.0));
    double max_global_variance = 0.0;
    const auto ids = d.class_ids();
    for (std::size_t v = 0; v < m; ++v) {
        const auto column = d.column(v);
        const double sd = sample_sd(column);
        max_global_variance = std::max(max_global_variance, sd * sd);
        std::vector<double> sum(k, 0.0);
        for (std::size_t i = 0; i < column.size(); ++i) sum[ids[i]] += column[i];
        for (std::size_t c = 0; c < k; ++c) means[c][v] = sum[c] / static_cast<double>(d.class_size(c));
        std::vector<double> ss(k, 0.0);
        for (std::size_t i = 0; i < column.size(); ++i) {
            const double diff = column[i] - means[ids[i]][v];
            ss[ids[i]] += diff * diff;
        }
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t nc = d.class_size(c);
            variances[c][v] = nc > 1 ? ss[c] / static_cast<double>(nc - 1) : 0.0;
        }
    }
    // An all-constant dataset still needs a positive variance.
    const double smoothing = max_global_variance > 0.0 ? 1e-9 * max_global_variance : 1e-9;
    for (auto& row : variances) {
        for (double& var : row) var += smoothing;
    }
    return GnbModel(d.classes(), d.variable_names(), class_priors(d), std::move(means), std::move(variances),
                    smoothing);
}

}  // namespace xnb
