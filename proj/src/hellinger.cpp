#include "xnb/hellinger.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "xnb/log.hpp"
#include "xnb/parallel.hpp"

namespace xnb {

DiscreteDistribution normalize_to_distribution(std::span<const double> densities, bool* zero_sum) {
    if (densities.empty()) throw std::invalid_argument("normalize_to_distribution: empty vector");
    double total = 0.0;
    for (double x : densities) {
        if (!(x >= 0.0)) throw std::invalid_argument("normalize_to_distribution: negative entry");
        total += x;
    }
    DiscreteDistribution out;
    if (zero_sum) *zero_sum = total == 0.0;
    if (total == 0.0) {
        out.probabilities.assign(densities.size(), 1.0 / static_cast<double>(densities.size()));
        return out;
    }
    out.probabilities.resize(densities.size());
    std::transform(densities.begin(), densities.end(), out.probabilities.begin(),
                   [total](double x) { return x / total; });
    return out;
}

double hellinger(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (p.probabilities.size() != q.probabilities.size()) {
        throw std::invalid_argument("hellinger: distributions have different lengths");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < p.probabilities.size(); ++j) {
        const double diff = std::sqrt(p.probabilities[j]) - std::sqrt(q.probabilities[j]);
        sum += diff * diff;
    }
    // Rounding can push the sum a hair above 2 for disjoint supports.
    return std::min(1.0, std::sqrt(sum) / std::numbers::sqrt2);
}

HellingerTable::HellingerTable(std::vector<std::string> classes, std::vector<std::string> variable_names)
    : classes_(std::move(classes)),
      variable_names_(std::move(variable_names)),
      n_pairs_(classes_.size() * (classes_.size() - (classes_.empty() ? 0 : 1)) / 2),
      values_(n_pairs_ * variable_names_.size(), 0.0) {}

std::size_t HellingerTable::pair_index(std::size_t class_i, std::size_t class_j) const {
    const std::size_t k = classes_.size();
    if (class_i == class_j || class_i >= k || class_j >= k) {
        throw std::out_of_range("HellingerTable: invalid class pair");
    }
    const std::size_t a = std::min(class_i, class_j);
    const std::size_t b = std::max(class_i, class_j);
    // Row-major index of (a, b) in the strict upper triangle.
    return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

double HellingerTable::at(std::size_t variable, std::size_t class_i, std::size_t class_j) const {
    if (variable >= variable_names_.size()) throw std::out_of_range("HellingerTable: variable out of range");
    return values_[variable * n_pairs_ + pair_index(class_i, class_j)];
}

void HellingerTable::set(std::size_t variable, std::size_t class_i, std::size_t class_j, double h) {
    if (variable >= variable_names_.size()) throw std::out_of_range("HellingerTable: variable out of range");
    values_[variable * n_pairs_ + pair_index(class_i, class_j)] = h;
}

HellingerTable hellinger_table(const Dataset& d, const KdeBank& bank, std::size_t mu, std::size_t jobs) {
    const std::size_t k = d.n_classes();
    const std::size_t m = d.n_variables();
    if (bank.n_classes() != k || bank.n_variables() != m || !bank.complete()) {
        throw std::invalid_argument("hellinger_table: KDE bank does not cover every (class, variable)");
    }
    HellingerTable table(d.classes(), d.variable_names());
    std::atomic<std::size_t> fallbacks{0};
    parallel_for(m, jobs, [&](std::size_t v) {
        const auto grid = make_grid(d.column(v), mu);
        std::vector<DiscreteDistribution> dists;
        dists.reserve(k);
        for (std::size_t c = 0; c < k; ++c) {
            bool zero_sum = false;
            dists.push_back(normalize_to_distribution(kde_on_grid(bank.at(c, v), grid), &zero_sum));
            if (zero_sum) fallbacks.fetch_add(1);
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) table.set(v, i, j, hellinger(dists[i], dists[j]));
        }
    });
    table.zero_sum_fallbacks = fallbacks.load();
    if (table.zero_sum_fallbacks > 0) {
        log::warn(std::to_string(table.zero_sum_fallbacks) +
                  " class density vector(s) vanished on the grid; replaced by uniform");
    }
    return table;
}

}  // namespace xnb
