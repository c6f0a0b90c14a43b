#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xnb/dataset.hpp"
#include "xnb/kde.hpp"
#include "xnb/selection.hpp"

namespace xnb {

struct XnbConfig {
    KernelKind kernel = KernelKind::gaussian;
    BandwidthRule bandwidth = BandwidthRule::silverman;
    std::size_t grid_points = kDefaultGridPoints;
    double theta = 0.999;
    double probability_floor = 1e-12;
    std::size_t jobs = 0;  // 0 = all hardware threads

    void validate() const;
};

// Wall-clock seconds spent in each fitting stage.
struct StageTimings {
    double bandwidth = 0.0;
    double kde = 0.0;
    double hellinger = 0.0;
    double select = 0.0;
    double build = 0.0;

    double total() const { return bandwidth + kde + hellinger + select + build; }
    StageTimings& operator+=(const StageTimings& other);
};

struct Prediction {
    std::size_t class_index = 0;
    std::string label;
    std::vector<double> log_scores;                     // aligned with the model's classes
    std::vector<std::vector<std::size_t>> used_features;  // per class, variable indices
};

// Index of the best score. Exact ties go to the larger prior, then the
// lexicographically smaller label (the lower class index).
std::size_t argmax_with_tie_break(std::span<const double> scores, std::span<const double> priors);

enum class ModelKind { xnb, fnb };

std::string_view to_string(ModelKind kind);

/// Class-specific KDE Bayes model: per class, the selected variables and one
/// density per selected variable.
class XnbModel {
public:
    struct ClassDensities {
        std::vector<std::size_t> variables;
        std::vector<KdeModel> densities;  // parallel to variables
    };

    XnbModel(ModelKind kind, XnbConfig config, std::vector<std::string> classes,
             std::vector<std::string> variable_names, std::vector<double> priors,
             std::vector<ClassDensities> per_class);

    ModelKind kind() const { return kind_; }
    const XnbConfig& config() const { return config_; }
    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::vector<double>& priors() const { return priors_; }
    const ClassDensities& class_densities(std::size_t class_index) const { return per_class_.at(class_index); }
    std::vector<std::size_t> features(std::size_t class_index) const { return per_class_.at(class_index).variables; }

    // score(c) = log prior(c) + sum over the class's variables of log max(f(x_v | c), floor).
    // When density_evaluations is given, the number of KDE evaluations is added to it.
    Prediction predict(std::span<const double> sample, std::size_t* density_evaluations = nullptr) const;

private:
    ModelKind kind_;
    XnbConfig config_;
    std::vector<std::string> classes_;
    std::vector<std::string> variable_names_;
    std::vector<double> priors_;
    std::vector<ClassDensities> per_class_;
};

// Side information from a fit: stage timings and, for XNB, the selection trace.
struct FitReport {
    StageTimings timings;
    std::optional<ClassFeatureMap> selection;
    std::size_t zero_sum_fallbacks = 0;
};

// Bandwidths -> per-class KDEs -> Hellinger table -> class-specific selection
// -> densities refit on the selected variables only.
XnbModel fit_xnb(const Dataset& d, const XnbConfig& config = {}, FitReport* report = nullptr);

// Same pipeline without the Hellinger and selection stages: every class keeps every variable.
XnbModel fit_fnb(const Dataset& d, const XnbConfig& config = {}, FitReport* report = nullptr);

/// Gaussian naive Bayes over all variables.
class GnbModel {
public:
    GnbModel(std::vector<std::string> classes, std::vector<std::string> variable_names,
             std::vector<double> priors, std::vector<std::vector<double>> means,
             std::vector<std::vector<double>> variances, double variance_smoothing);

    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::vector<double>& priors() const { return priors_; }
    double mean(std::size_t class_index, std::size_t variable) const { return means_.at(class_index).at(variable); }
    // Smoothed variance.
    double variance(std::size_t class_index, std::size_t variable) const {
        return variances_.at(class_index).at(variable);
    }
    double variance_smoothing() const { return smoothing_; }

    Prediction predict(std::span<const double> sample) const;

private:
    std::vector<std::string> classes_;
    std::vector<std::string> variable_names_;
    std::vector<double> priors_;
    std::vector<std::vector<double>> means_;
    std::vector<std::vector<double>> variances_;
    double smoothing_;
};

// Per (class, variable) mean and variance (denominator n-1, 0 for a single
// sample), plus 1e-9 times the largest global per-variable variance.
GnbModel fit_gnb(const Dataset& d);

// Model files are versioned JSON.
inline constexpr int kModelFormatVersion = 1;

using AnyModel = std::variant<XnbModel, GnbModel>;

void save_model(const XnbModel& model, const std::filesystem::path& path);
void save_model(const GnbModel& model, const std::filesystem::path& path);
std::string model_to_json(const XnbModel& model);
std::string model_to_json(const GnbModel& model);

// Throws ModelError on I/O failure, malformed JSON, a version mismatch or
// inconsistent content.
AnyModel load_model(const std::filesystem::path& path);
AnyModel model_from_json(std::string_view text);

}  // namespace xnb
