#include "xnb/kde_bank.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "xnb/parallel.hpp"

namespace xnb {

KdeBank::KdeBank(std::size_t n_classes, std::size_t n_variables)
    : n_classes_(n_classes), n_variables_(n_variables), cells_(n_classes * n_variables) {}

void KdeBank::set(std::size_t class_index, std::size_t variable, KdeModel model) {
    if (class_index >= n_classes_ || variable >= n_variables_) {
        throw std::out_of_range("KdeBank::set: cell out of range");
    }
    cells_[class_index * n_variables_ + variable] = std::move(model);
}

bool KdeBank::contains(std::size_t class_index, std::size_t variable) const {
    return class_index < n_classes_ && variable < n_variables_ &&
           cells_[class_index * n_variables_ + variable].has_value();
}

const KdeModel& KdeBank::at(std::size_t class_index, std::size_t variable) const {
    if (!contains(class_index, variable)) {
        throw std::out_of_range("KdeBank: no model for class " + std::to_string(class_index) +
                                ", variable " + std::to_string(variable));
    }
    return *cells_[class_index * n_variables_ + variable];
}

bool KdeBank::complete() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<double> class_values(const Dataset& d, std::size_t class_index, std::size_t variable) {
    const auto column = d.column(variable);
    const auto ids = d.class_ids();
    std::vector<double> out;
    out.reserve(d.class_size(class_index));
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (ids[i] == class_index) out.push_back(column[i]);
    }
    return out;
}

std::vector<std::vector<double>> compute_bandwidths(const Dataset& d, BandwidthRule rule,
                                                    std::size_t jobs) {
    const std::size_t k = d.n_classes();
    const std::size_t m = d.n_variables();
    std::vector<std::vector<double>> out(k, std::vector<double>(m));
    parallel_for(m, jobs, [&](std::size_t v) {
        const auto column = d.column(v);
        const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
        const double range = *hi - *lo;
        for (std::size_t c = 0; c < k; ++c) {
            out[c][v] = bandwidth(rule, class_values(d, c, v), range);
        }
    });
    return out;
}

KdeBank build_kde_bank(const Dataset& d, const std::vector<std::vector<double>>& bandwidths,
                       KernelKind kernel, std::size_t jobs) {
    const std::size_t k = d.n_classes();
    const std::size_t m = d.n_variables();
    KdeBank bank(k, m);
    parallel_for(m, jobs, [&](std::size_t v) {
        for (std::size_t c = 0; c < k; ++c) {
            bank.set(c, v, KdeModel(class_values(d, c, v), bandwidths.at(c).at(v), kernel));
        }
    });
    return bank;
}

}  // namespace xnb
