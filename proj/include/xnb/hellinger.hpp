#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xnb/dataset.hpp"
#include "xnb/kde.hpp"
#include "xnb/kde_bank.hpp"

namespace xnb {

struct DiscreteDistribution {
    std::vector<double> probabilities;
};

// Divides by the sum. A zero-sum vector becomes uniform and sets *zero_sum
// (when given). Throws std::invalid_argument on empty input or a negative entry.
DiscreteDistribution normalize_to_distribution(std::span<const double> densities,
                                               bool* zero_sum = nullptr);

// H(P, Q) = (1/sqrt 2) * sqrt(sum_j (sqrt p_j - sqrt q_j)^2), in [0, 1].
double hellinger(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Hellinger distance between the class-conditional densities of every
/// variable, for every unordered class pair.
class HellingerTable {
public:
    HellingerTable(std::vector<std::string> classes, std::vector<std::string> variable_names);

    std::size_t n_variables() const { return variable_names_.size(); }
    std::size_t n_classes() const { return classes_.size(); }
    std::size_t n_pairs() const { return n_pairs_; }
    std::size_t size() const { return values_.size(); }

    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::string>& variable_names() const { return variable_names_; }

    // Symmetric in the class arguments. Throws std::out_of_range for equal or
    // out-of-range classes.
    double at(std::size_t variable, std::size_t class_i, std::size_t class_j) const;
    void set(std::size_t variable, std::size_t class_i, std::size_t class_j, double h);

    // Number of density vectors that summed to zero and were replaced by uniform.
    std::size_t zero_sum_fallbacks = 0;

private:
    std::size_t pair_index(std::size_t class_i, std::size_t class_j) const;

    std::vector<std::string> classes_;
    std::vector<std::string> variable_names_;
    std::size_t n_pairs_;
    std::vector<double> values_;
};

// For each variable: shared grid over all samples of that variable, each
// class's KDE evaluated on it, normalized, and compared pairwise.
HellingerTable hellinger_table(const Dataset& d, const KdeBank& bank,
                               std::size_t mu = kDefaultGridPoints, std::size_t jobs = 0);

}  // namespace xnb
