#include "som/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "som/errors.hpp"

namespace som {

using json = nlohmann::ordered_json;

std::string to_json(const ModelFile& file) {
    const auto& model = file.model;
    const std::size_t m = model.feature_count();

    json j;
    j["format_version"] = kModelFormatVersion;
    j["lattice"] = {{"rows", model.lattice().rows()}, {"cols", model.lattice().cols()}};
    j["feature_count"] = m;
    j["feature_names"] = file.feature_names;

    json weights = json::array();
    for (std::size_t n = 0; n < model.neuron_count(); ++n) {
        const auto w = model.weight(n);
        weights.push_back(std::vector<double>(w.begin(), w.end()));
    }
    j["weights"] = std::move(weights);

    if (const auto& norm = model.normalization()) {
        j["normalization"] = {{"min", norm->min}, {"max", norm->max}};
    } else {
        j["normalization"] = nullptr;
    }

    if (file.label_map) {
        json entries = json::array();
        for (const auto& e : file.label_map->entries()) {
            if (e) {
                entries.push_back(*e);
            } else {
                entries.push_back(nullptr);
            }
        }
        j["label_map"] = std::move(entries);
    }

    const auto& c = file.config;
    json cfg;
    cfg["epochs"] = c.epochs;
    cfg["lr0"] = c.lr0;
    cfg["sigma0"] = c.sigma0 ? json(*c.sigma0) : json(nullptr);
    cfg["tau_lr"] = c.tau_lr ? json(*c.tau_lr) : json(nullptr);
    cfg["tau_sigma"] = c.tau_sigma ? json(*c.tau_sigma) : json(nullptr);
    cfg["seed"] = c.seed;
    cfg["init"] = std::string(to_string(c.init));
    j["train_config"] = std::move(cfg);

    return j.dump(2) + "\n";
}

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("model file missing '") + key + "'");
    return j.at(key);
}

std::optional<double> optional_real(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

} // namespace

ModelFile model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }

    try {
        const int version = require(j, "format_version").get<int>();
        if (version < 1 || version > kModelFormatVersion) {
            throw ParseError("unsupported model format_version " + std::to_string(version));
        }
        const auto& lat = require(j, "lattice");
        const LatticeSpec lattice(require(lat, "rows").get<std::size_t>(), require(lat, "cols").get<std::size_t>());
        const auto m = require(j, "feature_count").get<std::size_t>();
        auto names = require(j, "feature_names").get<std::vector<std::string>>();
        if (names.size() != m) throw ShapeError("feature_names length does not match feature_count");

        const auto& rows = require(j, "weights");
        if (!rows.is_array() || rows.size() != lattice.neuron_count()) {
            throw ShapeError("weights must hold rows*cols vectors");
        }
        std::vector<double> flat;
        flat.reserve(lattice.neuron_count() * m);
        for (const auto& r : rows) {
            auto w = r.get<std::vector<double>>();
            if (w.size() != m) throw ShapeError("weight vector length does not match feature_count");
            flat.insert(flat.end(), w.begin(), w.end());
        }

        std::optional<NormalizationParams> norm;
        if (const auto& nj = require(j, "normalization"); !nj.is_null()) {
            NormalizationParams p{require(nj, "min").get<std::vector<double>>(),
                                  require(nj, "max").get<std::vector<double>>()};
            for (std::size_t k = 0; k < p.min.size() && k < p.max.size(); ++k) {
                if (p.min[k] > p.max[k]) throw ParseError("normalization min exceeds max");
            }
            norm = std::move(p);
        }

        ModelFile out{SomModel(lattice, m, std::move(flat), std::move(norm)), std::move(names), std::nullopt, {}};

        if (j.contains("label_map") && !j["label_map"].is_null()) {
            std::vector<LabelMap::Entry> entries;
            for (const auto& e : j["label_map"]) {
                if (e.is_null()) {
                    entries.emplace_back(std::nullopt);
                } else {
                    entries.emplace_back(e.get<ClassLabel>());
                }
            }
            out.label_map = LabelMap(lattice, std::move(entries));
        }

        const auto& cfg = require(j, "train_config");
        out.config.epochs = require(cfg, "epochs").get<std::size_t>();
        out.config.lr0 = require(cfg, "lr0").get<double>();
        out.config.sigma0 = optional_real(require(cfg, "sigma0"));
        out.config.tau_lr = optional_real(require(cfg, "tau_lr"));
        out.config.tau_sigma = optional_real(require(cfg, "tau_sigma"));
        out.config.seed = require(cfg, "seed").get<std::uint64_t>();
        out.config.init = parse_init_scheme(require(cfg, "init").get<std::string>());
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    } catch (const ConfigError& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }
}

void save_model(const ModelFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << to_json(file);
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

} // namespace som
