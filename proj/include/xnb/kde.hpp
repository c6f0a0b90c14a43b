#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace xnb {

/// Kernel shapes. The first four belong to the beta polynomial family
/// K_s(u) = c_s (1 - u^2)^s on [-1, 1] with s = 0..3; gaussian is the
/// standard normal density.
enum class KernelKind { uniform, epanechnikov, biweight, triweight, gaussian };

enum class BandwidthRule { scott, silverman, silverman_adaptive };

inline constexpr std::size_t kDefaultGridPoints = 50;

std::string_view to_string(KernelKind kind);
std::string_view to_string(BandwidthRule rule);
// Accepts gaussian|uniform|epanechnikov|biweight|triweight; throws std::invalid_argument.
KernelKind parse_kernel(std::string_view token);
// Accepts scott|silverman|silverman-adaptive (underscore also accepted).
BandwidthRule parse_bandwidth_rule(std::string_view token);

// Normalizing constant (2s+1)!! / (2^(s+1) s!) for beta kernels, 1/sqrt(2*pi) for gaussian.
double kernel_coefficient(KernelKind kind);
double kernel_eval(KernelKind kind, double u);
// Half-width of the support: 1 for beta kernels, +inf for gaussian.
double kernel_support(KernelKind kind);

// Sample standard deviation (denominator n-1); 0 when n == 1.
double sample_sd(std::span<const double> values);
// Interquartile range with linear interpolation at positions (n-1)*{0.25, 0.75}.
double sample_iqr(std::span<const double> values);

// Rule-of-thumb bandwidth from summary statistics. May return 0 for degenerate input.
//   scott:              3.49  * sd * n^(-1/3)
//   silverman:          1.059 * sd * n^(-1/5)
//   silverman_adaptive: 0.9 * min(sd, iqr/1.34) * n^(-1/5)
double bandwidth_formula(BandwidthRule rule, double sd, double iqr, std::size_t n);

// h used when the rule yields a non-positive or non-finite value.
double fallback_bandwidth(double reference_range);

// Bandwidth for a sample. reference_range is the range of the variable over the
// whole dataset (used only by the fallback); defaults to the range of values.
double bandwidth(BandwidthRule rule, std::span<const double> values,
                 std::optional<double> reference_range = std::nullopt);

/// One-dimensional Parzen-Rosenblatt estimator over a fixed sample.
class KdeModel {
public:
    KdeModel(std::vector<double> samples, double bandwidth, KernelKind kernel);

    // (1 / (n h)) * sum_i K((x - x_i) / h), summed over every sample.
    double density_at(double x) const;

    std::span<const double> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double bandwidth() const { return h_; }
    KernelKind kernel() const { return kernel_; }

private:
    std::vector<double> samples_;
    double h_;
    KernelKind kernel_;
};

KdeModel fit_kde(std::span<const double> values, KernelKind kernel, BandwidthRule rule,
                 std::optional<double> reference_range = std::nullopt);

// mu equally spaced points from min to max of values. A constant variable gets
// the grid [c - 1, c + 1].
std::vector<double> make_grid(std::span<const double> values, std::size_t mu = kDefaultGridPoints);

std::vector<double> kde_on_grid(const KdeModel& model, std::span<const double> grid);

}  // namespace xnb
