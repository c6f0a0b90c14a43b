#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xnb {

// Which CSV column carries the class label: a header name or a zero-based index.
struct ClassColumn {
    std::variant<std::string, std::size_t> key;

    // "NAME" selects by header, "@INDEX" by position.
    static ClassColumn parse(std::string_view token);
    static ClassColumn last();
};

/// Labeled numeric matrix, stored one column per variable.
///
/// Classes are the distinct labels in lexicographic order; every per-class
/// vector in the library is indexed in that order.
class Dataset {
public:
    Dataset(std::vector<std::string> variable_names,
            std::vector<std::vector<double>> columns,
            std::vector<std::string> labels);

    std::size_t n_samples() const { return labels_.size(); }
    std::size_t n_variables() const { return columns_.size(); }
    std::size_t n_classes() const { return classes_.size(); }

    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& classes() const { return classes_; }

    std::span<const double> column(std::size_t variable) const { return columns_.at(variable); }
    double value(std::size_t row, std::size_t variable) const { return columns_[variable][row]; }
    std::vector<double> row(std::size_t index) const;

    // Class index (into classes()) of every sample.
    std::span<const std::size_t> class_ids() const { return class_ids_; }
    std::size_t class_size(std::size_t class_index) const { return class_sizes_.at(class_index); }
    // Sample indices belonging to a class, in row order.
    std::vector<std::size_t> rows_of_class(std::size_t class_index) const;

    std::optional<std::size_t> find_variable(std::string_view name) const;
    std::optional<std::size_t> find_class(std::string_view label) const;

    // Copy of the selected rows; the class set is recomputed from what remains.
    Dataset subset(std::span<const std::size_t> rows) const;

private:
    std::vector<std::string> variable_names_;
    std::vector<std::vector<double>> columns_;
    std::vector<std::string> labels_;
    std::vector<std::string> classes_;
    std::vector<std::size_t> class_ids_;
    std::vector<std::size_t> class_sizes_;
};

// Headered numeric table without labels, used for prediction input.
struct SampleTable {
    std::vector<std::string> variable_names;
    std::vector<std::vector<double>> rows;
};

Dataset load_csv(const std::filesystem::path& path, const ClassColumn& class_column);
Dataset read_csv(std::istream& in, const ClassColumn& class_column,
                 std::string_view source = "<stream>");

SampleTable load_samples_csv(const std::filesystem::path& path);
SampleTable read_samples_csv(std::istream& in, std::string_view source = "<stream>");

// Values are written with 17 significant digits so a reload is bit-exact.
void write_csv(std::ostream& out, const Dataset& d, std::string_view class_header = "class");
void save_csv(const std::filesystem::path& path, const Dataset& d,
              std::string_view class_header = "class");

// prior(c) = |c| / n, aligned with d.classes().
std::vector<double> class_priors(const Dataset& d);

struct FoldPlan {
    std::size_t k = 0;
    std::vector<std::size_t> assignments;  // fold of every sample

    std::vector<std::size_t> test_rows(std::size_t fold) const;
    std::vector<std::size_t> train_rows(std::size_t fold) const;
};

// Per-fold sample counts for each class: counts[fold][class]. Each class count
// is floor or ceil of size/k, fold totals differ by at most one, and every cell
// stays within one sample of the class's global share of that fold.
std::vector<std::vector<std::size_t>> stratified_fold_counts(std::span<const std::size_t> class_sizes,
                                                             std::size_t k);

// Stratified assignment following stratified_fold_counts; rows within each
// class are shuffled with Rng(seed) before being dealt to their folds.
FoldPlan stratified_kfold(const Dataset& d, std::size_t k, std::uint64_t seed);

}  // namespace xnb
