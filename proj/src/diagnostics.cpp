#include "xnb/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

#include "xnb/log.hpp"
#include "xnb/parallel.hpp"
#include "xnb/rng.hpp"

namespace xnb {
namespace {

// c[0] + c[1] x + ... + c[nord-1] x^(nord-1), evaluated as in AS R94.
double poly(const double* c, int nord, double x) {
    double result = c[0];
    if (nord > 1) {
        double p = x * c[nord - 1];
        for (int j = nord - 2; j > 0; --j) p = (p + c[j]) * x;
        result += p;
    }
    return result;
}

double sign(long v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

ShapiroWilkResult shapiro_wilk(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 3 || n > 5000) {
        throw std::invalid_argument("shapiro_wilk: sample size " + std::to_string(n) +
                                    " outside [3, 5000]");
    }
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end());

    static constexpr double small = 1e-19;
    static constexpr double g[2] = {-2.273, .459};
    static constexpr double c1[6] = {0., .221157, -.147981, -2.07119, 4.434685, -2.706056};
    static constexpr double c2[6] = {0., .042981, -.293762, -1.752461, 5.682633, -3.582633};
    static constexpr double c3[4] = {.544, -.39978, .025054, -6.714e-4};
    static constexpr double c4[4] = {1.3822, -.77857, .062767, -.0020322};
    static constexpr double c5[4] = {-1.5861, -.31082, -.083751, .0038915};
    static constexpr double c6[3] = {-.4803, -.082676, .0030302};

    const boost::math::normal standard;
    const std::size_t half = n / 2;
    const auto an = static_cast<double>(n);
    std::vector<double> a(half + 1, 0.0);  // 1-based coefficients of the lower half

    if (n == 3) {
        a[1] = std::sqrt(0.5);
    } else {
        const double an25 = an + .25;
        double summ2 = 0.0;
        for (std::size_t i = 1; i <= half; ++i) {
            a[i] = boost::math::quantile(standard, (static_cast<double>(i) - .375) / an25);
            summ2 += a[i] * a[i];
        }
        summ2 *= 2.;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1. / std::sqrt(an);
        const double a1 = poly(c1, 6, rsn) - a[1] / ssumm2;

        std::size_t i1 = 0;
        double fac = 0.0;
        if (n > 5) {
            i1 = 3;
            const double a2 = -a[2] / ssumm2 + poly(c2, 6, rsn);
            fac = std::sqrt((summ2 - 2. * (a[1] * a[1]) - 2. * (a[2] * a[2])) /
                            (1. - 2. * (a1 * a1) - 2. * (a2 * a2)));
            a[2] = a2;
        } else {
            i1 = 2;
            fac = std::sqrt((summ2 - 2. * (a[1] * a[1])) / (1. - 2. * (a1 * a1)));
        }
        a[1] = a1;
        for (std::size_t i = i1; i <= half; ++i) a[i] /= -fac;
    }

    const double range = x[n - 1] - x[0];
    if (range < small) throw std::invalid_argument("shapiro_wilk: all values are identical");

    // W is the squared correlation between the range-scaled data and the
    // antisymmetric coefficient vector.
    double sa = 0.0;
    double sx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        if (i != j) sa += sign(static_cast<long>(i) - static_cast<long>(j)) * a[1 + std::min(i, j)];
        sx += x[i] / range;
    }
    sa /= an;
    sx /= an;
    double ssa = 0.0;
    double ssx = 0.0;
    double sax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        const double asa =
            i != j ? sign(static_cast<long>(i) - static_cast<long>(j)) * a[1 + std::min(i, j)] - sa : -sa;
        const double xsx = x[i] / range - sx;
        ssa += asa * asa;
        ssx += xsx * xsx;
        sax += asa * xsx;
    }
    // 1 - W, computed directly to keep precision when W is close to 1.
    const double ssassx = std::sqrt(ssa * ssx);
    const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);

    ShapiroWilkResult result;
    result.w = 1. - w1;

    if (n == 3) {
        constexpr double pi6 = 1.90985931710274;   // 6 / pi
        constexpr double stqr = 1.04719755119660;  // pi / 3
        result.p = std::max(0.0, pi6 * (std::asin(std::sqrt(result.w)) - stqr));
        return result;
    }
    double y = std::log(w1);
    const double xx = std::log(an);
    double mean = 0.0;
    double sd = 0.0;
    if (n <= 11) {
        const double gamma = poly(g, 2, an);
        if (y >= gamma) {
            result.p = 1e-99;
            return result;
        }
        y = -std::log(gamma - y);
        mean = poly(c3, 4, an);
        sd = std::exp(poly(c4, 4, an));
    } else {
        mean = poly(c5, 4, xx);
        sd = std::exp(poly(c6, 3, xx));
    }
    result.p = boost::math::cdf(boost::math::complement(boost::math::normal(mean, sd), y));
    return result;
}

NormalityScan normality_scan(const Dataset& d, double alpha, std::size_t jobs) {
    if (d.n_samples() < 3 || d.n_samples() > 5000) {
        throw std::invalid_argument("normality_scan: sample count must lie in [3, 5000]");
    }
    NormalityScan scan;
    scan.alpha = alpha;
    scan.rows.resize(d.n_variables());
    parallel_for(d.n_variables(), jobs, [&](std::size_t v) {
        auto& row = scan.rows[v];
        row.variable = v;
        const auto column = d.column(v);
        const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
        if (*hi - *lo < 1e-19) {
            row.zero_variance = true;
            row.rejected = true;
            row.w = std::numeric_limits<double>::quiet_NaN();
            row.p = 0.0;
            return;
        }
        const auto sw = shapiro_wilk(column);
        row.w = sw.w;
        row.p = sw.p;
        row.rejected = sw.p < alpha;
    });
    scan.tested = d.n_variables();
    for (const auto& row : scan.rows) {
        scan.rejected += row.rejected ? 1 : 0;
        scan.zero_variance += row.zero_variance ? 1 : 0;
    }
    if (scan.zero_variance > 0) {
        log::warn(std::to_string(scan.zero_variance) +
                  " zero-variance variable(s) counted as non-normal in the normality scan");
    }
    scan.rejection_ratio = static_cast<double>(scan.rejected) / static_cast<double>(scan.tested);
    return scan;
}

std::vector<double> within_class_residuals(std::span<const double> values,
                                           std::span<const std::size_t> class_ids) {
    if (values.size() != class_ids.size()) {
        throw std::invalid_argument("within_class_residuals: length mismatch");
    }
    const std::size_t k = class_ids.empty() ? 0 : *std::max_element(class_ids.begin(), class_ids.end()) + 1;
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum[class_ids[i]] += values[i];
        ++count[class_ids[i]];
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = values[i] - sum[class_ids[i]] / static_cast<double>(count[class_ids[i]]);
    }
    return out;
}

std::vector<double> within_class_residuals(std::span<const double> values,
                                           std::span<const std::string> labels) {
    if (values.size() != labels.size()) {
        throw std::invalid_argument("within_class_residuals: length mismatch");
    }
    std::map<std::string, std::size_t> index;
    for (const auto& label : labels) index.emplace(label, 0);
    std::size_t next = 0;
    for (auto& [label, id] : index) id = next++;
    std::vector<std::size_t> ids;
    ids.reserve(labels.size());
    for (const auto& label : labels) ids.push_back(index.at(label));
    return within_class_residuals(values, ids);
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("pearson: length mismatch");
    const auto n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double correlation_p_value(double r, std::size_t n) {
    if (n < 3) throw std::invalid_argument("correlation_p_value: need n >= 3");
    const double ar = std::abs(r);
    if (ar >= 1.0) return 0.0;
    const auto df = static_cast<double>(n - 2);
    const double t = ar * std::sqrt(df / (1.0 - r * r));
    return 2.0 * boost::math::cdf(boost::math::complement(boost::math::students_t(df), t));
}

namespace {

// (i, j) with i < j for the linear index of the strict upper triangle in row-major order.
std::pair<std::size_t, std::size_t> pair_from_index(std::uint64_t index, std::size_t m) {
    const double mm = static_cast<double>(2 * m - 1);
    auto i = static_cast<std::uint64_t>(std::floor((mm - std::sqrt(mm * mm - 8.0 * static_cast<double>(index))) / 2.0));
    auto row_start = [m](std::uint64_t r) { return r * (2 * m - r - 1) / 2; };
    while (i > 0 && row_start(i) > index) --i;
    while (row_start(i + 1) <= index) ++i;
    const std::uint64_t j = i + 1 + (index - row_start(i));
    return {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
}

}  // namespace

CiScan conditional_independence_scan(const Dataset& d, const CiScanConfig& config) {
    const std::size_t n = d.n_samples();
    const std::size_t m = d.n_variables();
    if (n < 4) throw std::invalid_argument("conditional_independence_scan: need at least 4 samples");

    CiScan scan;
    scan.config = config;
    scan.total_pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;

    // Unit-norm residual vectors, so r is a plain dot product.
    std::vector<std::vector<double>> unit(m);
    std::vector<bool> degenerate(m, false);
    parallel_for(m, config.jobs, [&](std::size_t v) {
        auto res = within_class_residuals(d.column(v), d.class_ids());
        double norm = 0.0;
        double scale = 0.0;
        for (double x : res) {
            norm += x * x;
            scale = std::max(scale, std::abs(x));
        }
        const auto column = d.column(v);
        double magnitude = 0.0;
        for (double x : column) magnitude = std::max(magnitude, std::abs(x));
        // Residuals at rounding level are treated as zero variance.
        if (norm == 0.0 || scale <= 1e-12 * std::max(magnitude, 1.0)) {
            degenerate[v] = true;
            return;
        }
        const double inv = 1.0 / std::sqrt(norm);
        for (double& x : res) x *= inv;
        unit[v] = std::move(res);
    });
    scan.zero_variance_variables = static_cast<std::size_t>(std::count(degenerate.begin(), degenerate.end(), true));

    std::vector<std::uint64_t> pairs;
    const bool sample = config.max_pairs && *config.max_pairs < scan.total_pairs;
    if (sample) {
        // Floyd's algorithm: distinct uniform sample of pair indices.
        Rng rng(config.seed);
        const std::uint64_t want = *config.max_pairs;
        std::unordered_set<std::uint64_t> picked;
        picked.reserve(want * 2);
        for (std::uint64_t j = scan.total_pairs - want; j < scan.total_pairs; ++j) {
            const std::uint64_t t = rng.uniform_index(j + 1);
            if (!picked.insert(t).second) picked.insert(j);
        }
        pairs.assign(picked.begin(), picked.end());
        std::sort(pairs.begin(), pairs.end());
        scan.sampled = true;
    } else {
        pairs.resize(scan.total_pairs);
        std::iota(pairs.begin(), pairs.end(), std::uint64_t{0});
    }

    struct Outcome {
        double r = 0.0;
        double p = 1.0;
        bool skipped = false;
        bool flagged = false;
    };
    std::vector<Outcome> outcomes(pairs.size());
    constexpr std::size_t chunk = 4096;
    const std::size_t chunks = (pairs.size() + chunk - 1) / chunk;
    parallel_for(chunks, config.jobs, [&](std::size_t ch) {
        const std::size_t end = std::min(pairs.size(), (ch + 1) * chunk);
        for (std::size_t idx = ch * chunk; idx < end; ++idx) {
            const auto [a, b] = pair_from_index(pairs[idx], m);
            auto& out = outcomes[idx];
            if (degenerate[a] || degenerate[b]) {
                out.skipped = true;
                continue;
            }
            double r = std::inner_product(unit[a].begin(), unit[a].end(), unit[b].begin(), 0.0);
            r = std::clamp(r, -1.0, 1.0);
            out.r = r;
            out.p = correlation_p_value(r, n);
            out.flagged = out.p < config.p_max && std::abs(r) > config.r_min;
        }
    });

    scan.flagged_partners.assign(m, 0);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto& out = outcomes[idx];
        if (out.skipped) {
            ++scan.skipped_pairs;
            continue;
        }
        ++scan.examined_pairs;
        if (!out.flagged) continue;
        const auto [a, b] = pair_from_index(pairs[idx], m);
        scan.flagged.push_back({a, b, out.r, out.p});
        ++scan.flagged_partners[a];
        ++scan.flagged_partners[b];
    }
    if (scan.skipped_pairs > 0) {
        log::warn(std::to_string(scan.skipped_pairs) +
                  " variable pair(s) skipped: zero within-class residual variance");
    }
    scan.dependent_variables = static_cast<std::size_t>(
        std::count_if(scan.flagged_partners.begin(), scan.flagged_partners.end(), [](std::size_t c) { return c > 0; }));
    scan.dependent_ratio = static_cast<double>(scan.dependent_variables) / static_cast<double>(m);
    return scan;
}

std::string to_json(const DiagnosticsReport& report, const Dataset& d, bool include_rows) {
    using nlohmann::json;
    const auto& sw = report.normality;
    const auto& ci = report.independence;
    json j;
    j["schema_version"] = 1;
    j["samples"] = d.n_samples();
    j["variables"] = d.n_variables();
    j["classes"] = d.n_classes();
    j["normality"] = {{"test", "shapiro-wilk (Royston AS R94)"},
                      {"alpha", sw.alpha},
                      {"tested", sw.tested},
                      {"rejected", sw.rejected},
                      {"zero_variance_counted_as_rejected", sw.zero_variance},
                      {"sw_rejection_ratio", sw.rejection_ratio}};
    json ci_json = {{"test", "pearson correlation of within-class residuals"},
                    {"p_max", ci.config.p_max},
                    {"r_min", ci.config.r_min},
                    {"seed", ci.config.seed},
                    {"total_pairs", ci.total_pairs},
                    {"examined_pairs", ci.examined_pairs},
                    {"skipped_pairs", ci.skipped_pairs},
                    {"flagged_pairs", ci.flagged.size()},
                    {"sampled", ci.sampled},
                    {"dependent_variables", ci.dependent_variables},
                    {"ci_dependent_ratio", ci.dependent_ratio},
                    {"ratio_definition", "variables belonging to at least one flagged pair / all variables"}};
    ci_json["max_pairs"] = ci.config.max_pairs ? json(*ci.config.max_pairs) : json(nullptr);
    j["independence"] = std::move(ci_json);
    if (include_rows) {
        json rows = json::array();
        for (std::size_t v = 0; v < d.n_variables(); ++v) {
            const auto& row = sw.rows.at(v);
            json r = {{"variable", d.variable_names()[v]},
                      {"sw_p", row.p},
                      {"sw_rejected", row.rejected},
                      {"zero_variance", row.zero_variance},
                      {"flagged_partners", ci.flagged_partners.empty() ? 0 : ci.flagged_partners[v]}};
            r["sw_w"] = std::isfinite(row.w) ? json(row.w) : json(nullptr);
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
    }
    return j.dump(2);
}

std::string summary_line(const DiagnosticsReport& report, const Dataset& d) {
    std::ostringstream out;
    out << "#s=" << d.n_samples() << " #v=" << d.n_variables() << " #c=" << d.n_classes() << std::fixed
        << std::setprecision(2) << " SW=" << report.normality.rejection_ratio
        << " P=" << report.independence.dependent_ratio;
    if (report.independence.sampled) {
        out << " (P estimated from " << report.independence.examined_pairs << " sampled pairs)";
    }
    return out.str();
}

}  // namespace xnb
