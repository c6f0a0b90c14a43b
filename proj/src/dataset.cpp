#include "xnb/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "xnb/error.hpp"
#include "xnb/log.hpp"
#include "xnb/rng.hpp"

namespace xnb {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back(trim(field));
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    fields.emplace_back(trim(field));
    return fields;
}

struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
};

RawTable read_table(std::istream& in, std::string_view source) {
    RawTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (trim(line).empty()) continue;
        auto fields = split_record(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            std::ostringstream msg;
            msg << source << ": line " << line_no << " has " << fields.size()
                << " fields, header has " << table.header.size();
            throw DataError(msg.str());
        }
        table.rows.push_back(std::move(fields));
        table.line_numbers.push_back(line_no);
    }
    if (!have_header) throw DataError(std::string(source) + ": empty file, header row expected");
    if (table.rows.empty()) throw DataError(std::string(source) + ": no data rows");
    return table;
}

double parse_cell(const std::string& cell, std::string_view source, std::size_t line_no,
                  const std::string& column) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    if (!cell.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << source << ": line " << line_no << ", column '" << column
            << "': cannot parse '" << cell << "' as a finite real";
        throw DataError(msg.str());
    }
    return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    return in;
}


// Shortest-augmenting-path max flow on a dense capacity matrix. The graphs here
// have (classes + folds + 2) nodes, so O(V^2) per BFS is fine.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : n_(nodes), cap_(nodes * nodes, 0) {}

    void add(std::size_t from, std::size_t to, long capacity) { cap_[from * n_ + to] += capacity; }
    long residual(std::size_t from, std::size_t to) const { return cap_[from * n_ + to]; }

    long max_flow(std::size_t source, std::size_t sink) {
        long total = 0;
        std::vector<std::size_t> parent(n_);
        for (;;) {
            std::fill(parent.begin(), parent.end(), n_);
            parent[source] = source;
            std::vector<std::size_t> queue{source};
            for (std::size_t head = 0; head < queue.size() && parent[sink] == n_; ++head) {
                const std::size_t u = queue[head];
                for (std::size_t v = 0; v < n_; ++v) {
                    if (parent[v] == n_ && cap_[u * n_ + v] > 0) {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if (parent[sink] == n_) return total;
            long push = std::numeric_limits<long>::max();
            for (std::size_t v = sink; v != source; v = parent[v]) {
                push = std::min(push, cap_[parent[v] * n_ + v]);
            }
            for (std::size_t v = sink; v != source; v = parent[v]) {
                cap_[parent[v] * n_ + v] -= push;
                cap_[v * n_ + parent[v]] += push;
            }
            total += push;
        }
    }

private:
    std::size_t n_;
    std::vector<long> cap_;
};

}  // namespace

std::vector<std::vector<std::size_t>> stratified_fold_counts(std::span<const std::size_t> class_sizes,
                                                             std::size_t k) {
    const std::size_t n_classes = class_sizes.size();
    const std::size_t n = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
    std::vector<std::size_t> base(n_classes);
    std::vector<std::size_t> remainder(n_classes);
    std::size_t base_total = 0;
    std::size_t remainder_total = 0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        base[c] = class_sizes[c] / k;
        remainder[c] = class_sizes[c] % k;
        base_total += base[c];
        remainder_total += remainder[c];
    }
    // Every fold gets base[c] of each class; the remainders are distributed so
    // that fold sizes differ by at most one. Folds 0..(R mod k)-1 are the large ones.
    std::vector<std::size_t> fold_extras(k, remainder_total / k);
    for (std::size_t f = 0; f < remainder_total % k; ++f) ++fold_extras[f];

    std::vector<std::vector<std::size_t>> counts(k, base);
    auto round_robin = [&] {
        log::warn("stratified folds: proportional extra assignment infeasible, using round-robin");
        counts.assign(k, base);
        std::size_t position = 0;
        for (std::size_t c = 0; c < n_classes; ++c) {
            for (std::size_t i = 0; i < remainder[c]; ++i) ++counts[position++ % k][c];
        }
        return counts;
    };

    // An extra in cell (f, c) is allowed when it keeps |count - p_c * size_f| <= 1;
    // it is forced when the base count alone would violate the bound.
    constexpr double eps = 1e-12;
    const std::size_t source = 0;
    const std::size_t sink = 1 + n_classes + k;
    FlowNetwork net(sink + 1);
    std::vector<long> class_supply(remainder.begin(), remainder.end());
    std::vector<long> fold_demand(fold_extras.begin(), fold_extras.end());
    for (std::size_t c = 0; c < n_classes; ++c) {
        const double p = static_cast<double>(class_sizes[c]) / static_cast<double>(n);
        for (std::size_t f = 0; f < k; ++f) {
            const double expected = p * static_cast<double>(base_total + fold_extras[f]);
            const auto b = static_cast<double>(base[c]);
            const bool extra_ok = b + 1.0 <= expected + 1.0 + eps;
            const bool base_ok = b >= expected - 1.0 - eps;
            if (!base_ok) {
                if (!extra_ok) return round_robin();
                ++counts[f][c];
                --class_supply[c];
                --fold_demand[f];
            } else if (extra_ok) {
                net.add(1 + c, 1 + n_classes + f, 1);
            }
        }
    }
    long needed = 0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        if (class_supply[c] < 0) return round_robin();
        net.add(source, 1 + c, class_supply[c]);
        needed += class_supply[c];
    }
    for (std::size_t f = 0; f < k; ++f) {
        if (fold_demand[f] < 0) return round_robin();
        net.add(1 + n_classes + f, sink, fold_demand[f]);
    }
    if (net.max_flow(source, sink) != needed) return round_robin();
    for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t f = 0; f < k; ++f) {
            // Saturated class->fold edges carry one extra sample.
            if (net.residual(1 + n_classes + f, 1 + c) > 0) ++counts[f][c];
        }
    }
    return counts;
}

ClassColumn ClassColumn::parse(std::string_view token) {
    if (token.starts_with('@')) {
        std::size_t index = 0;
        const auto digits = token.substr(1);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw std::invalid_argument("class column '" + std::string(token) +
                                        "': expected @INDEX with a non-negative integer");
        }
        return ClassColumn{index};
    }
    if (token.empty()) throw std::invalid_argument("class column name is empty");
    return ClassColumn{std::string(token)};
}

ClassColumn ClassColumn::last() {
    return ClassColumn{std::numeric_limits<std::size_t>::max()};
}

Dataset::Dataset(std::vector<std::string> variable_names, std::vector<std::vector<double>> columns,
                 std::vector<std::string> labels)
    : variable_names_(std::move(variable_names)),
      columns_(std::move(columns)),
      labels_(std::move(labels)) {
    if (labels_.empty()) throw DataError("dataset has no samples");
    if (columns_.empty()) throw DataError("dataset has no variables");
    if (variable_names_.size() != columns_.size()) {
        throw DataError("variable name count does not match column count");
    }
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        if (columns_[v].size() != labels_.size()) {
            throw DataError("column '" + variable_names_[v] + "' length does not match label count");
        }
        for (double x : columns_[v]) {
            if (!std::isfinite(x)) {
                throw DataError("column '" + variable_names_[v] + "' contains a non-finite value");
            }
        }
    }
    classes_ = labels_;
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    class_sizes_.assign(classes_.size(), 0);
    class_ids_.reserve(labels_.size());
    for (const auto& label : labels_) {
        const auto it = std::lower_bound(classes_.begin(), classes_.end(), label);
        const auto id = static_cast<std::size_t>(it - classes_.begin());
        class_ids_.push_back(id);
        ++class_sizes_[id];
    }
}

std::vector<double> Dataset::row(std::size_t index) const {
    std::vector<double> out(columns_.size());
    for (std::size_t v = 0; v < columns_.size(); ++v) out[v] = columns_[v].at(index);
    return out;
}

std::vector<std::size_t> Dataset::rows_of_class(std::size_t class_index) const {
    std::vector<std::size_t> rows;
    rows.reserve(class_sizes_.at(class_index));
    for (std::size_t i = 0; i < class_ids_.size(); ++i) {
        if (class_ids_[i] == class_index) rows.push_back(i);
    }
    return rows;
}

std::optional<std::size_t> Dataset::find_variable(std::string_view name) const {
    const auto it = std::find(variable_names_.begin(), variable_names_.end(), name);
    if (it == variable_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variable_names_.begin());
}

std::optional<std::size_t> Dataset::find_class(std::string_view label) const {
    const auto it = std::lower_bound(classes_.begin(), classes_.end(), label);
    if (it == classes_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - classes_.begin());
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
    std::vector<std::vector<double>> columns(columns_.size());
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        columns[v].reserve(rows.size());
        for (std::size_t r : rows) columns[v].push_back(columns_[v].at(r));
    }
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (std::size_t r : rows) labels.push_back(labels_.at(r));
    return Dataset(variable_names_, std::move(columns), std::move(labels));
}

Dataset read_csv(std::istream& in, const ClassColumn& class_column, std::string_view source) {
    RawTable table = read_table(in, source);
    std::size_t class_index = 0;
    if (const auto* name = std::get_if<std::string>(&class_column.key)) {
        const auto it = std::find(table.header.begin(), table.header.end(), *name);
        if (it == table.header.end()) {
            throw DataError(std::string(source) + ": class column '" + *name + "' not in header");
        }
        class_index = static_cast<std::size_t>(it - table.header.begin());
    } else {
        class_index = std::get<std::size_t>(class_column.key);
        if (class_index == std::numeric_limits<std::size_t>::max()) class_index = table.header.size() - 1;
        if (class_index >= table.header.size()) {
            throw DataError(std::string(source) + ": class column @" + std::to_string(class_index) +
                            " out of range (" + std::to_string(table.header.size()) + " columns)");
        }
    }
    if (table.header.size() < 2) {
        throw DataError(std::string(source) + ": need at least one variable besides the class column");
    }

    std::vector<std::string> names;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c != class_index) names.push_back(table.header[c]);
    }
    std::vector<std::vector<double>> columns(names.size(), std::vector<double>(table.rows.size()));
    std::vector<std::string> labels;
    labels.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& fields = table.rows[r];
        std::size_t v = 0;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c == class_index) continue;
            columns[v][r] = parse_cell(fields[c], source, table.line_numbers[r], table.header[c]);
            ++v;
        }
        if (fields[class_index].empty()) {
            throw DataError(std::string(source) + ": line " + std::to_string(table.line_numbers[r]) +
                            ": empty class label");
        }
        labels.push_back(fields[class_index]);
    }
    return Dataset(std::move(names), std::move(columns), std::move(labels));
}

Dataset load_csv(const std::filesystem::path& path, const ClassColumn& class_column) {
    auto in = open_for_read(path);
    return read_csv(in, class_column, path.string());
}

SampleTable read_samples_csv(std::istream& in, std::string_view source) {
    RawTable table = read_table(in, source);
    SampleTable out;
    out.variable_names = table.header;
    out.rows.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::vector<double> row(table.header.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            row[c] = parse_cell(table.rows[r][c], source, table.line_numbers[r], table.header[c]);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

SampleTable load_samples_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return read_samples_csv(in, path.string());
}

void write_csv(std::ostream& out, const Dataset& d, std::string_view class_header) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (const auto& name : d.variable_names()) out << name << ',';
    out << class_header << '\n';
    for (std::size_t i = 0; i < d.n_samples(); ++i) {
        for (std::size_t v = 0; v < d.n_variables(); ++v) out << d.value(i, v) << ',';
        out << d.labels()[i] << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

void save_csv(const std::filesystem::path& path, const Dataset& d, std::string_view class_header) {
    auto out = open_for_write(path);
    write_csv(out, d, class_header);
}

std::vector<double> class_priors(const Dataset& d) {
    std::vector<double> priors(d.n_classes());
    const auto n = static_cast<double>(d.n_samples());
    for (std::size_t c = 0; c < priors.size(); ++c) {
        priors[c] = static_cast<double>(d.class_size(c)) / n;
    }
    return priors;
}

std::vector<std::size_t> FoldPlan::test_rows(std::size_t fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] == fold) rows.push_back(i);
    }
    return rows;
}

std::vector<std::size_t> FoldPlan::train_rows(std::size_t fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] != fold) rows.push_back(i);
    }
    return rows;
}

FoldPlan stratified_kfold(const Dataset& d, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("fold count must be at least 2");
    if (k > d.n_samples()) {
        throw std::invalid_argument("fold count " + std::to_string(k) + " exceeds sample count " +
                                    std::to_string(d.n_samples()));
    }
    std::vector<std::size_t> sizes(d.n_classes());
    for (std::size_t c = 0; c < sizes.size(); ++c) sizes[c] = d.class_size(c);
    const auto counts = stratified_fold_counts(sizes, k);

    Rng rng(seed);
    FoldPlan plan;
    plan.k = k;
    plan.assignments.assign(d.n_samples(), 0);
    for (std::size_t c = 0; c < d.n_classes(); ++c) {
        auto rows = d.rows_of_class(c);
        rng.shuffle(std::span<std::size_t>(rows));
        std::size_t next = 0;
        for (std::size_t f = 0; f < k; ++f) {
            for (std::size_t i = 0; i < counts[f][c]; ++i) plan.assignments[rows[next++]] = f;
        }
    }
    return plan;
}

}  // namespace xnb
