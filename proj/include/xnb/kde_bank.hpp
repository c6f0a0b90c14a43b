#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xnb/dataset.hpp"
#include "xnb/kde.hpp"

namespace xnb {

// Fitted density per (class, variable).
class KdeBank {
public:
    KdeBank(std::size_t n_classes, std::size_t n_variables);

    std::size_t n_classes() const { return n_classes_; }
    std::size_t n_variables() const { return n_variables_; }

    void set(std::size_t class_index, std::size_t variable, KdeModel model);
    bool contains(std::size_t class_index, std::size_t variable) const;
    // Throws std::out_of_range when the cell has not been fitted.
    const KdeModel& at(std::size_t class_index, std::size_t variable) const;
    bool complete() const;

private:
    std::size_t n_classes_;
    std::size_t n_variables_;
    std::vector<std::optional<KdeModel>> cells_;
};

// Bandwidth for every (class, variable); bandwidths[c][v]. The degenerate
// fallback uses the variable's range over all samples.
std::vector<std::vector<double>> compute_bandwidths(const Dataset& d, BandwidthRule rule,
                                                    std::size_t jobs = 0);

// Class-restricted sample of one variable.
std::vector<double> class_values(const Dataset& d, std::size_t class_index, std::size_t variable);

KdeBank build_kde_bank(const Dataset& d, const std::vector<std::vector<double>>& bandwidths,
                       KernelKind kernel, std::size_t jobs = 0);

}  // namespace xnb
