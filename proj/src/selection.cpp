#include "xnb/selection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "xnb/log.hpp"
#include "xnb/parallel.hpp"

namespace xnb {

std::string_view to_string(TieBreak rule) {
    switch (rule) {
        case TieBreak::lexicographic_name: return "lexicographic-variable-name";
    }
    return "unknown";
}

void SelectionConfig::validate() const {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::invalid_argument("theta must lie strictly between 0 and 1");
    }
}

ClassFeatureMap::ClassFeatureMap(std::vector<std::string> classes, std::vector<std::string> variable_names,
                                 std::vector<ClassSelection> selections, SelectionConfig config)
    : classes_(std::move(classes)),
      variable_names_(std::move(variable_names)),
      selections_(std::move(selections)),
      config_(config) {
    if (selections_.size() != classes_.size()) {
        throw std::invalid_argument("ClassFeatureMap: one selection per class required");
    }
}

std::vector<std::size_t> ClassFeatureMap::variables(std::size_t class_index) const {
    std::vector<std::size_t> out;
    for (const auto& sv : selections_.at(class_index).variables) out.push_back(sv.variable);
    return out;
}

std::vector<std::string> ClassFeatureMap::variable_names_for(std::size_t class_index) const {
    std::vector<std::string> out;
    for (const auto& sv : selections_.at(class_index).variables) out.push_back(variable_names_[sv.variable]);
    return out;
}

std::size_t ClassFeatureMap::total_selected() const {
    std::size_t total = 0;
    for (const auto& s : selections_) total += s.variables.size();
    return total;
}

std::vector<std::size_t> ClassFeatureMap::union_variables() const {
    std::vector<std::size_t> out;
    for (const auto& s : selections_) {
        for (const auto& sv : s.variables) out.push_back(sv.variable);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double discriminatory_power(std::span<const std::size_t> subset, std::size_t class_i,
                            const HellingerTable& table) {
    if (subset.empty()) throw std::invalid_argument("discriminatory_power: empty subset");
    if (class_i >= table.n_classes()) throw std::out_of_range("discriminatory_power: unknown class");
    double residual = 1.0;
    for (std::size_t v : subset) {
        if (v >= table.n_variables()) throw std::out_of_range("discriminatory_power: unknown variable");
        for (std::size_t j = 0; j < table.n_classes(); ++j) {
            if (j != class_i) residual *= 1.0 - table.at(v, class_i, j);
        }
    }
    return 1.0 - residual;
}

namespace {

ClassSelection select_for_class(const HellingerTable& table, const SelectionConfig& config,
                                std::size_t ci) {
    const std::size_t k = table.n_classes();
    const std::size_t m = table.n_variables();
    const auto& names = table.variable_names();

    ClassSelection result;
    std::vector<bool> chosen(m, false);
    // Residual of every pair, kept current as variables are added.
    std::vector<double> residual(k, 1.0);

    auto add = [&](std::size_t v, std::size_t cj) {
        chosen[v] = true;
        SelectedVariable sv;
        sv.variable = v;
        sv.step = result.variables.size() + 1;
        sv.entered_for = cj;
        double class_residual = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == ci) continue;
            const double h = table.at(v, ci, j);
            residual[j] *= 1.0 - h;
            class_residual *= residual[j];
            sv.pairs.push_back({j, h});
        }
        sv.pair_power = 1.0 - residual[cj];
        sv.class_power = 1.0 - class_residual;
        result.variables.push_back(std::move(sv));
    };

    for (std::size_t cj = 0; cj < k; ++cj) {
        if (cj == ci) continue;
        if (1.0 - residual[cj] > config.theta) continue;

        // Max-heap of the still-unselected candidates for this pair.
        auto better = [&](std::size_t a, std::size_t b) {
            const double ha = table.at(a, ci, cj);
            const double hb = table.at(b, ci, cj);
            if (ha != hb) return ha < hb;
            return names[a] > names[b];
        };
        std::vector<std::size_t> heap;
        heap.reserve(m - result.variables.size());
        for (std::size_t v = 0; v < m; ++v) {
            if (!chosen[v]) heap.push_back(v);
        }
        std::make_heap(heap.begin(), heap.end(), better);
        while (1.0 - residual[cj] <= config.theta && !heap.empty()) {
            std::pop_heap(heap.begin(), heap.end(), better);
            const std::size_t v = heap.back();
            heap.pop_back();
            add(v, cj);
        }
        if (1.0 - residual[cj] <= config.theta) {
            result.exhausted = true;
            break;
        }
    }
    return result;
}

}  // namespace

ClassFeatureMap select_class_specific(const HellingerTable& table, const SelectionConfig& config,
                                      std::size_t jobs) {
    config.validate();
    const std::size_t k = table.n_classes();
    std::vector<ClassSelection> selections(k);
    parallel_for(k, jobs, [&](std::size_t ci) { selections[ci] = select_for_class(table, config, ci); });
    return ClassFeatureMap(table.classes(), table.variable_names(), std::move(selections), config);
}

Explanation explain_selection(const ClassFeatureMap& map) {
    Explanation out;
    const std::size_t k = map.classes().size();
    if (k < 2) {
        out.warnings.emplace_back("fewer than two classes: no class pairs to explain");
        log::warn(out.warnings.back());
        return out;
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (const auto& sv : map.selection(c).variables) {
            double h = 0.0;
            for (const auto& pc : sv.pairs) {
                if (pc.other_class == sv.entered_for) h = pc.h;
            }
            out.rows.push_back({c, sv.variable, sv.step, sv.entered_for, h, sv.class_power});
        }
        if (map.selection(c).exhausted) {
            out.warnings.push_back("class '" + map.classes()[c] +
                                   "': threshold not reached, all variables selected");
        }
    }
    out.union_variables = map.union_variables();
    out.membership.assign(k, std::vector<int>(out.union_variables.size(), 0));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t v : map.variables(c)) {
            const auto it = std::lower_bound(out.union_variables.begin(), out.union_variables.end(), v);
            out.membership[c][static_cast<std::size_t>(it - out.union_variables.begin())] = 1;
        }
    }
    return out;
}

}  // namespace xnb
