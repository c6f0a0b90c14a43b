#include "xnb/kde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace xnb {
namespace {

constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;

int beta_order(KernelKind kind) {
    switch (kind) {
        case KernelKind::uniform: return 0;
        case KernelKind::epanechnikov: return 1;
        case KernelKind::biweight: return 2;
        case KernelKind::triweight: return 3;
        case KernelKind::gaussian: break;
    }
    return -1;
}

// (2s+1)!! / (2^(s+1) s!) evaluated in integers; exact for the small s used here.
double beta_coefficient(int s) {
    long long double_factorial = 1;
    for (int i = 2 * s + 1; i > 1; i -= 2) double_factorial *= i;
    long long denominator = 1LL << (s + 1);
    for (int i = 2; i <= s; ++i) denominator *= i;
    return static_cast<double>(double_factorial) / static_cast<double>(denominator);
}

}  // namespace

std::string_view to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::uniform: return "uniform";
        case KernelKind::epanechnikov: return "epanechnikov";
        case KernelKind::biweight: return "biweight";
        case KernelKind::triweight: return "triweight";
        case KernelKind::gaussian: return "gaussian";
    }
    return "unknown";
}

std::string_view to_string(BandwidthRule rule) {
    switch (rule) {
        case BandwidthRule::scott: return "scott";
        case BandwidthRule::silverman: return "silverman";
        case BandwidthRule::silverman_adaptive: return "silverman-adaptive";
    }
    return "unknown";
}

KernelKind parse_kernel(std::string_view token) {
    for (auto kind : {KernelKind::gaussian, KernelKind::uniform, KernelKind::epanechnikov,
                      KernelKind::biweight, KernelKind::triweight}) {
        if (token == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unknown kernel '" + std::string(token) + "'");
}

BandwidthRule parse_bandwidth_rule(std::string_view token) {
    if (token == "scott") return BandwidthRule::scott;
    if (token == "silverman") return BandwidthRule::silverman;
    if (token == "silverman-adaptive" || token == "silverman_adaptive") {
        return BandwidthRule::silverman_adaptive;
    }
    throw std::invalid_argument("unknown bandwidth rule '" + std::string(token) + "'");
}

double kernel_coefficient(KernelKind kind) {
    const int s = beta_order(kind);
    return s < 0 ? kInvSqrt2Pi : beta_coefficient(s);
}

double kernel_eval(KernelKind kind, double u) {
    if (kind == KernelKind::gaussian) return kInvSqrt2Pi * std::exp(-0.5 * u * u);
    if (std::abs(u) > 1.0) return 0.0;
    const double base = 1.0 - u * u;
    switch (kind) {
        case KernelKind::uniform: return 0.5;
        case KernelKind::epanechnikov: return 0.75 * base;
        case KernelKind::biweight: return (15.0 / 16.0) * base * base;
        case KernelKind::triweight: return (35.0 / 32.0) * base * base * base;
        case KernelKind::gaussian: break;
    }
    return 0.0;
}

double kernel_support(KernelKind kind) {
    return kind == KernelKind::gaussian ? std::numeric_limits<double>::infinity() : 1.0;
}

double sample_sd(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double x : values) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

double sample_iqr(std::span<const double> values) {
    if (values.empty()) return 0.0;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(sorted.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
    };
    return quantile(0.75) - quantile(0.25);
}

double bandwidth_formula(BandwidthRule rule, double sd, double iqr, std::size_t n) {
    const auto count = static_cast<double>(n);
    switch (rule) {
        case BandwidthRule::scott: return 3.49 * sd * std::pow(count, -1.0 / 3.0);
        case BandwidthRule::silverman: return 1.059 * sd * std::pow(count, -0.2);
        case BandwidthRule::silverman_adaptive: {
            const double spread = std::min(sd, iqr / 1.34);
            return 0.9 * spread * std::pow(count, -0.2);
        }
    }
    return 0.0;
}

double fallback_bandwidth(double reference_range) {
    const double h = 1e-3 * reference_range;
    return std::isfinite(h) ? std::max(h, 1e-9) : 1e-9;
}

double bandwidth(BandwidthRule rule, std::span<const double> values,
                 std::optional<double> reference_range) {
    if (values.empty()) throw std::invalid_argument("bandwidth: empty sample");
    const double sd = sample_sd(values);
    const double iqr = rule == BandwidthRule::silverman_adaptive ? sample_iqr(values) : 0.0;
    const double h = bandwidth_formula(rule, sd, iqr, values.size());
    if (std::isfinite(h) && h > 0.0) return h;
    double range = 0.0;
    if (reference_range) {
        range = *reference_range;
    } else {
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        range = *hi - *lo;
    }
    return fallback_bandwidth(range);
}

KdeModel::KdeModel(std::vector<double> samples, double bandwidth, KernelKind kernel)
    : samples_(std::move(samples)), h_(bandwidth), kernel_(kernel) {
    if (samples_.empty()) throw std::invalid_argument("KdeModel: empty sample");
    if (!(h_ > 0.0) || !std::isfinite(h_)) {
        throw std::invalid_argument("KdeModel: bandwidth must be finite and positive");
    }
}

double KdeModel::density_at(double x) const {
    const double inv_h = 1.0 / h_;
    double sum = 0.0;
    if (kernel_ == KernelKind::gaussian) {
        for (double xi : samples_) {
            const double u = (x - xi) * inv_h;
            sum += std::exp(-0.5 * u * u);
        }
        sum *= kInvSqrt2Pi;
    } else {
        for (double xi : samples_) sum += kernel_eval(kernel_, (x - xi) * inv_h);
    }
    return sum / (static_cast<double>(samples_.size()) * h_);
}

KdeModel fit_kde(std::span<const double> values, KernelKind kernel, BandwidthRule rule,
                 std::optional<double> reference_range) {
    if (values.empty()) throw std::invalid_argument("fit_kde: empty sample");
    const double h = bandwidth(rule, values, reference_range);
    return KdeModel(std::vector<double>(values.begin(), values.end()), h, kernel);
}

std::vector<double> make_grid(std::span<const double> values, std::size_t mu) {
    if (mu < 2) throw std::invalid_argument("make_grid: need at least 2 points");
    if (values.empty()) throw std::invalid_argument("make_grid: empty sample");
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    std::vector<double> grid(mu);
    const double step = (hi - lo) / static_cast<double>(mu - 1);
    for (std::size_t i = 0; i < mu; ++i) grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    return grid;
}

std::vector<double> kde_on_grid(const KdeModel& model, std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("kde_on_grid: empty grid");
    std::vector<double> out(grid.size());
    std::transform(grid.begin(), grid.end(), out.begin(),
                   [&](double x) { return model.density_at(x); });
    return out;
}

}  // namespace xnb
