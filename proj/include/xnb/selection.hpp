#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xnb/hellinger.hpp"

namespace xnb {

enum class TieBreak { lexicographic_name };

std::string_view to_string(TieBreak rule);

struct SelectionConfig {
    double theta = 0.999;
    TieBreak tie_break = TieBreak::lexicographic_name;

    // Throws std::invalid_argument unless 0 < theta < 1.
    void validate() const;
};

struct PairContribution {
    std::size_t other_class = 0;
    double h = 0.0;
};

struct SelectedVariable {
    std::size_t variable = 0;
    std::size_t step = 0;         // 1-based position in the class's greedy order
    std::size_t entered_for = 0;  // class pair that triggered the addition
    double pair_power = 0.0;      // 1 - residual of that pair right after adding
    double class_power = 0.0;     // discriminatory power of the selection prefix ending here
    std::vector<PairContribution> pairs;  // H against every other class
};

struct ClassSelection {
    std::vector<SelectedVariable> variables;
    // Candidates ran out before the threshold was passed; every variable is selected.
    bool exhausted = false;
};

/// Per-class variable subsets, in the order the greedy search added them.
class ClassFeatureMap {
public:
    ClassFeatureMap(std::vector<std::string> classes, std::vector<std::string> variable_names,
                    std::vector<ClassSelection> selections, SelectionConfig config);

    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const ClassSelection& selection(std::size_t class_index) const { return selections_.at(class_index); }
    const SelectionConfig& config() const { return config_; }

    std::vector<std::size_t> variables(std::size_t class_index) const;
    std::vector<std::string> variable_names_for(std::size_t class_index) const;
    std::size_t total_selected() const;
    // Distinct variables across all classes, ascending.
    std::vector<std::size_t> union_variables() const;

private:
    std::vector<std::string> classes_;
    std::vector<std::string> variable_names_;
    std::vector<ClassSelection> selections_;
    SelectionConfig config_;
};

// 1 - prod over c_j != c_i and v in subset of (1 - H(c_i, c_j | v)).
// Throws std::out_of_range for an unknown variable or class, std::invalid_argument
// for an empty subset.
double discriminatory_power(std::span<const std::size_t> subset, std::size_t class_i,
                            const HellingerTable& table);

/// Greedy class-specific selection. For each class c_i and each other class c_j
/// (sorted label order), the pair residual starts from the variables already
/// chosen for c_i; while 1 - residual <= theta, the unselected variable with the
/// largest H(c_i, c_j | v) is added (ties: smaller variable name). If the
/// candidates run out, the class keeps every variable.
ClassFeatureMap select_class_specific(const HellingerTable& table, const SelectionConfig& config = {},
                                      std::size_t jobs = 0);

struct ExplanationRow {
    std::size_t class_index = 0;
    std::size_t variable = 0;
    std::size_t step = 0;
    std::size_t other_class = 0;
    double h = 0.0;
    double cumulative_power = 0.0;
};

struct Explanation {
    std::vector<ExplanationRow> rows;
    // Variables in the union of all class subsets, and membership[c][i] = 1 when
    // union_variables[i] is selected for class c.
    std::vector<std::size_t> union_variables;
    std::vector<std::vector<int>> membership;
    std::vector<std::string> warnings;
};

Explanation explain_selection(const ClassFeatureMap& map);

}  // namespace xnb
