// Command-line front end: fit, predict, evaluate, select, diagnose, inspect hellinger.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "xnb/classifier.hpp"
#include "xnb/dataset.hpp"
#include "xnb/diagnostics.hpp"
#include "xnb/error.hpp"
#include "xnb/evaluation.hpp"
#include "xnb/hellinger.hpp"
#include "xnb/kde_bank.hpp"
#include "xnb/selection.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string kernel = "gaussian";
    std::string bandwidth = "silverman";
    std::size_t mu = xnb::kDefaultGridPoints;
    double theta = 0.999;
    double floor = 1e-12;
    std::uint64_t seed = 0;
    std::string class_col;
    std::string format;
    std::size_t jobs = 0;
    std::string model;
    std::string out;

    xnb::XnbConfig model_config() const {
        xnb::XnbConfig c;
        c.kernel = xnb::parse_kernel(kernel);
        c.bandwidth = xnb::parse_bandwidth_rule(bandwidth);
        c.grid_points = mu;
        c.theta = theta;
        c.probability_floor = floor;
        c.jobs = jobs;
        c.validate();
        return c;
    }

    xnb::ClassColumn class_column() const {
        return class_col.empty() ? xnb::ClassColumn::last() : xnb::ClassColumn::parse(class_col);
    }
};

// Writes to --out when given, otherwise stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

json selection_json(const xnb::ClassFeatureMap& map) {
    json out = json::object();
    for (std::size_t c = 0; c < map.classes().size(); ++c) {
        json vars = json::array();
        for (const auto& sv : map.selection(c).variables) {
            json pairs = json::array();
            for (const auto& pc : sv.pairs) {
                pairs.push_back({{"other_class", map.classes()[pc.other_class]}, {"h", pc.h}});
            }
            vars.push_back({{"variable", map.variable_names()[sv.variable]},
                            {"step", sv.step},
                            {"entered_for", map.classes()[sv.entered_for]},
                            {"cumulative_d", sv.class_power},
                            {"pairs", std::move(pairs)}});
        }
        out[map.classes()[c]] = std::move(vars);
    }
    return out;
}

int run_fit(const GlobalOptions& g, const std::string& data_path, const std::string& method) {
    if (g.model.empty()) throw CLI::ValidationError("--model", "fit needs --model PATH for the output file");
    const auto d = xnb::load_csv(data_path, g.class_column());
    const auto m = xnb::parse_method(method);
    if (m == xnb::Method::gnb) {
        xnb::save_model(xnb::fit_gnb(d), g.model);
        std::cout << "gnb model: " << d.n_classes() << " classes, " << d.n_variables() << " variables\n";
        return 0;
    }
    xnb::FitReport report;
    const auto config = g.model_config();
    const auto model = m == xnb::Method::xnb ? xnb::fit_xnb(d, config, &report) : xnb::fit_fnb(d, config, &report);
    xnb::save_model(model, g.model);
    std::cout << to_string(model.kind()) << " model: " << d.n_classes() << " classes, " << d.n_variables()
              << " variables\n";
    for (std::size_t c = 0; c < model.classes().size(); ++c) {
        const auto vars = model.features(c);
        std::cout << model.classes()[c] << '\t' << vars.size();
        if (m == xnb::Method::xnb) {
            for (std::size_t v : vars) std::cout << '\t' << model.variable_names()[v];
        }
        std::cout << '\n';
    }
    return 0;
}

int run_predict(const GlobalOptions& g, const std::string& samples_path) {
    if (g.model.empty()) throw CLI::ValidationError("--model", "predict needs --model PATH");
    const auto any = xnb::load_model(g.model);
    const auto table = xnb::load_samples_csv(samples_path);
    const auto& names = std::visit([](const auto& m) -> const std::vector<std::string>& { return m.variable_names(); }, any);
    const auto& classes = std::visit([](const auto& m) -> const std::vector<std::string>& { return m.classes(); }, any);

    // Map model variables onto the input columns by name; extra columns are ignored.
    std::vector<std::size_t> source(names.size());
    for (std::size_t v = 0; v < names.size(); ++v) {
        const auto it = std::find(table.variable_names.begin(), table.variable_names.end(), names[v]);
        if (it == table.variable_names.end()) throw xnb::DataError("input lacks model variable '" + names[v] + "'");
        source[v] = static_cast<std::size_t>(it - table.variable_names.begin());
    }
    Output out(g.out);
    auto& os = out.stream();
    os << "row,label";
    for (const auto& c : classes) os << ",log_score_" << c;
    os << '\n' << std::setprecision(17);
    std::vector<double> sample(names.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t v = 0; v < names.size(); ++v) sample[v] = table.rows[r][source[v]];
        const auto p = std::visit([&](const auto& m) { return m.predict(sample); }, any);
        os << r << ',' << p.label;
        for (double s : p.log_scores) os << ',' << s;
        os << '\n';
    }
    return 0;
}

int run_evaluate(const GlobalOptions& g, const std::string& data_path, const std::string& methods,
                 std::size_t folds) {
    const auto d = xnb::load_csv(data_path, g.class_column());
    xnb::EvaluationConfig config;
    config.folds = folds;
    config.seed = g.seed;
    config.model = g.model_config();
    const auto list = xnb::parse_methods(methods);
    const auto report = xnb::evaluate_cv(d, list, config);
    Output out(g.out);
    xnb::emit_report(report, xnb::parse_report_format(g.format.empty() ? "tsv" : g.format), out.stream());
    return 0;
}

int run_select(const GlobalOptions& g, const std::string& data_path) {
    const auto d = xnb::load_csv(data_path, g.class_column());
    xnb::FitReport report;
    xnb::fit_xnb(d, g.model_config(), &report);
    Output out(g.out);
    out.stream() << selection_json(*report.selection).dump(2) << '\n';
    return 0;
}

int run_diagnose(const GlobalOptions& g, const std::string& data_path, double alpha, double p_max, double r_min,
                 std::size_t max_pairs) {
    const auto d = xnb::load_csv(data_path, g.class_column());
    xnb::DiagnosticsReport report;
    report.normality = xnb::normality_scan(d, alpha, g.jobs);
    xnb::CiScanConfig ci;
    ci.p_max = p_max;
    ci.r_min = r_min;
    ci.max_pairs = max_pairs == 0 ? std::nullopt : std::optional<std::size_t>(max_pairs);
    ci.seed = g.seed;
    ci.jobs = g.jobs;
    report.independence = xnb::conditional_independence_scan(d, ci);
    Output out(g.out);
    out.stream() << xnb::to_json(report, d) << '\n';
    std::cerr << xnb::summary_line(report, d) << '\n';
    return 0;
}

int run_inspect_hellinger(const GlobalOptions& g, const std::string& data_path) {
    const auto d = xnb::load_csv(data_path, g.class_column());
    if (d.n_classes() < 2) throw xnb::DataError("hellinger table needs at least 2 classes");
    const auto config = g.model_config();
    const auto bandwidths = xnb::compute_bandwidths(d, config.bandwidth, config.jobs);
    const auto bank = xnb::build_kde_bank(d, bandwidths, config.kernel, config.jobs);
    const auto table = xnb::hellinger_table(d, bank, config.grid_points, config.jobs);
    Output out(g.out);
    auto& os = out.stream();
    os << "variable\tclass_i\tclass_j\th\n" << std::fixed << std::setprecision(6);
    for (std::size_t v = 0; v < table.n_variables(); ++v) {
        for (std::size_t i = 0; i < table.n_classes(); ++i) {
            for (std::size_t j = i + 1; j < table.n_classes(); ++j) {
                os << table.variable_names()[v] << '\t' << table.classes()[i] << '\t' << table.classes()[j] << '\t'
                   << table.at(v, i, j) << '\n';
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Class-specific kernel naive Bayes (XNB) with NB/FNB baselines and diagnostics"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--kernel", g.kernel, "gaussian|uniform|epanechnikov|biweight|triweight")->capture_default_str();
    app.add_option("--bandwidth", g.bandwidth, "scott|silverman|silverman-adaptive")->capture_default_str();
    app.add_option("--mu", g.mu, "Grid points per variable for the Hellinger stage")->capture_default_str();
    app.add_option("--theta", g.theta, "Discriminatory power threshold in (0,1)")->capture_default_str();
    app.add_option("--floor", g.floor, "Probability floor used in log scores")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for fold assignment and pair sampling")->capture_default_str();
    app.add_option("--class-col", g.class_col, "Class column: NAME or @INDEX (default: last column)");
    app.add_option("--format", g.format, "Report format: json|tsv");
    app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--model", g.model, "Model file path");
    app.add_option("--out", g.out, "Output file (default: stdout)");

    std::string data_path;
    std::string fit_method = "xnb";
    auto* fit = app.add_subcommand("fit", "Fit a model and save it as JSON");
    fit->add_option("data", data_path, "Training CSV")->required()->check(CLI::ExistingFile);
    fit->add_option("--method", fit_method, "xnb|fnb|gnb")->capture_default_str();

    std::string samples_path;
    auto* predict = app.add_subcommand("predict", "Predict labels for an unlabeled CSV");
    predict->add_option("samples", samples_path, "CSV of samples with a header")->required()->check(CLI::ExistingFile);

    std::string methods = "gnb,xnb";
    std::size_t folds = 10;
    auto* evaluate = app.add_subcommand("evaluate", "Stratified k-fold cross-validation");
    evaluate->add_option("data", data_path, "Labeled CSV")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--methods", methods, "Comma-separated subset of gnb,fnb,xnb")->capture_default_str();
    evaluate->add_option("--folds", folds, "Number of folds")->capture_default_str();

    auto* select = app.add_subcommand("select", "Print the class-specific variable selection as JSON");
    select->add_option("data", data_path, "Labeled CSV")->required()->check(CLI::ExistingFile);

    double alpha = 0.05;
    double p_max = 1e-6;
    double r_min = 0.7;
    std::size_t max_pairs = 200'000;
    auto* diagnose = app.add_subcommand("diagnose", "Normality and conditional-independence scans");
    diagnose->add_option("data", data_path, "Labeled CSV")->required()->check(CLI::ExistingFile);
    diagnose->add_option("--alpha", alpha, "Shapiro-Wilk significance level")->capture_default_str();
    diagnose->add_option("--p-max", p_max, "p-value threshold for dependent pairs")->capture_default_str();
    diagnose->add_option("--r-min", r_min, "Minimum |r| for dependent pairs")->capture_default_str();
    diagnose->add_option("--max-pairs", max_pairs, "Pair sampling cap (0 = all pairs)")->capture_default_str();

    auto* inspect = app.add_subcommand("inspect", "Inspect intermediate tables");
    inspect->require_subcommand(1);
    auto* inspect_hellinger = inspect->add_subcommand("hellinger", "Hellinger distance table as TSV");
    inspect_hellinger->add_option("data", data_path, "Labeled CSV")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    // Option values that are malformed are usage errors, not data errors.
    try {
        g.model_config();
        g.class_column();
        if (!g.format.empty()) xnb::parse_report_format(g.format);
        if (*fit) xnb::parse_method(fit_method);
        if (*evaluate) {
            xnb::parse_methods(methods);
            if (folds < 2) throw std::invalid_argument("--folds must be at least 2");
        }
        if (*diagnose && !(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("--alpha must be in (0, 1)");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*fit) return run_fit(g, data_path, fit_method);
        if (*predict) return run_predict(g, samples_path);
        if (*evaluate) return run_evaluate(g, data_path, methods, folds);
        if (*select) return run_select(g, data_path);
        if (*diagnose) return run_diagnose(g, data_path, alpha, p_max, r_min, max_pairs);
        if (*inspect_hellinger) return run_inspect_hellinger(g, data_path);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const xnb::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const xnb::ModelError& e) {
        std::cerr << "model error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
