#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xnb/classifier.hpp"
#include "xnb/error.hpp"

namespace xnb {
namespace {

using nlohmann::json;

json config_to_json(const XnbConfig& config) {
    return json{{"kernel", to_string(config.kernel)},
                {"bandwidth", to_string(config.bandwidth)},
                {"mu", config.grid_points},
                {"theta", config.theta},
                {"probability_floor", config.probability_floor},
                {"tie_break", to_string(TieBreak::lexicographic_name)},
                {"pair_order", "sorted-class-label"}};
}

XnbConfig config_from_json(const json& j) {
    XnbConfig config;
    config.kernel = parse_kernel(j.at("kernel").get<std::string>());
    config.bandwidth = parse_bandwidth_rule(j.at("bandwidth").get<std::string>());
    config.grid_points = j.at("mu").get<std::size_t>();
    config.theta = j.at("theta").get<double>();
    config.probability_floor = j.at("probability_floor").get<double>();
    config.validate();
    return config;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ModelError("cannot open '" + path.string() + "' for writing");
    out << text << '\n';
    if (!out) throw ModelError("failed writing '" + path.string() + "'");
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ModelError(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

XnbModel xnb_from_json(const json& j, ModelKind kind) {
    const XnbConfig config = config_from_json(j.at("config"));
    auto classes = j.at("classes").get<std::vector<std::string>>();
    auto variables = j.at("variables").get<std::vector<std::string>>();
    auto priors = j.at("priors").get<std::vector<double>>();
    const json& features = j.at("features");
    const json& kde = j.at("kde");
    std::vector<XnbModel::ClassDensities> per_class(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (const auto& name : features.at(classes[c]).get<std::vector<std::string>>()) {
            per_class[c].variables.push_back(index_of(variables, name, "variable"));
            const json& cell = kde.at(classes[c]).at(name);
            const KernelKind kernel = parse_kernel(cell.at("kernel").get<std::string>());
            per_class[c].densities.emplace_back(cell.at("samples").get<std::vector<double>>(),
                                                cell.at("h").get<double>(), kernel);
        }
    }
    return XnbModel(kind, config, std::move(classes), std::move(variables), std::move(priors),
                    std::move(per_class));
}

GnbModel gnb_from_json(const json& j) {
    auto classes = j.at("classes").get<std::vector<std::string>>();
    auto variables = j.at("variables").get<std::vector<std::string>>();
    auto priors = j.at("priors").get<std::vector<double>>();
    std::vector<std::vector<double>> means;
    std::vector<std::vector<double>> variances;
    for (const auto& c : classes) {
        means.push_back(j.at("means").at(c).get<std::vector<double>>());
        variances.push_back(j.at("variances").at(c).get<std::vector<double>>());
    }
    return GnbModel(std::move(classes), std::move(variables), std::move(priors), std::move(means),
                    std::move(variances), j.at("variance_smoothing").get<double>());
}

}  // namespace

std::string model_to_json(const XnbModel& model) {
    json features = json::object();
    json kde = json::object();
    for (std::size_t c = 0; c < model.classes().size(); ++c) {
        const auto& label = model.classes()[c];
        const auto& pc = model.class_densities(c);
        json names = json::array();
        json cells = json::object();
        for (std::size_t i = 0; i < pc.variables.size(); ++i) {
            const auto& name = model.variable_names()[pc.variables[i]];
            names.push_back(name);
            const auto& density = pc.densities[i];
            cells[name] = json{{"samples", std::vector<double>(density.samples().begin(), density.samples().end())},
                               {"h", density.bandwidth()},
                               {"kernel", to_string(density.kernel())}};
        }
        features[label] = std::move(names);
        kde[label] = std::move(cells);
    }
    const json j{{"version", kModelFormatVersion},
                 {"model_type", to_string(model.kind())},
                 {"config", config_to_json(model.config())},
                 {"classes", model.classes()},
                 {"variables", model.variable_names()},
                 {"priors", model.priors()},
                 {"features", std::move(features)},
                 {"kde", std::move(kde)}};
    return j.dump();
}

std::string model_to_json(const GnbModel& model) {
    json means = json::object();
    json variances = json::object();
    for (std::size_t c = 0; c < model.classes().size(); ++c) {
        std::vector<double> mu(model.variable_names().size());
        std::vector<double> var(model.variable_names().size());
        for (std::size_t v = 0; v < mu.size(); ++v) {
            mu[v] = model.mean(c, v);
            var[v] = model.variance(c, v);
        }
        means[model.classes()[c]] = mu;
        variances[model.classes()[c]] = var;
    }
    const json j{{"version", kModelFormatVersion},
                 {"model_type", "gnb"},
                 {"classes", model.classes()},
                 {"variables", model.variable_names()},
                 {"priors", model.priors()},
                 {"variance_smoothing", model.variance_smoothing()},
                 {"means", std::move(means)},
                 {"variances", std::move(variances)}};
    return j.dump();
}

void save_model(const XnbModel& model, const std::filesystem::path& path) {
    write_text(path, model_to_json(model));
}

void save_model(const GnbModel& model, const std::filesystem::path& path) {
    write_text(path, model_to_json(model));
}

AnyModel model_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        const int version = j.at("version").get<int>();
        if (version != kModelFormatVersion) {
            throw ModelError("model format version " + std::to_string(version) + " is not supported (expected " +
                             std::to_string(kModelFormatVersion) + ")");
        }
        const auto type = j.at("model_type").get<std::string>();
        if (type == "xnb") return xnb_from_json(j, ModelKind::xnb);
        if (type == "fnb") return xnb_from_json(j, ModelKind::fnb);
        if (type == "gnb") return gnb_from_json(j);
        throw ModelError("unknown model_type '" + type + "'");
    } catch (const ModelError&) {
        throw;
    } catch (const std::exception& e) {
        throw ModelError(std::string("invalid model file: ") + e.what());
    }
}

AnyModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

}  // namespace xnb
