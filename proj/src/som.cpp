#include "som/som.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "som/errors.hpp"
#include "som/kernels.hpp"

namespace som {

std::string_view to_string(InitScheme s) {
    switch (s) {
    case InitScheme::UniformRandom: return "uniform";
    case InitScheme::SampleDraw: return "sample";
    }
    return "uniform";
}

InitScheme parse_init_scheme(std::string_view s) {
    if (s == "uniform") return InitScheme::UniformRandom;
    if (s == "sample") return InitScheme::SampleDraw;
    throw ConfigError("unknown init scheme '" + std::string(s) + "' (expected uniform or sample)");
}

void TrainConfig::validate() const {
    if (epochs == 0) throw ConfigError("epochs must be at least 1");
    if (!(lr0 > 0.0 && lr0 <= 1.0)) throw ConfigError("lr0 must lie in (0, 1]");
    if (sigma0 && !(*sigma0 > 0.0 && std::isfinite(*sigma0))) throw ConfigError("sigma0 must be positive");
    if (tau_lr && !(*tau_lr > 0.0)) throw ConfigError("tau_lr must be positive");
    if (tau_sigma && !(*tau_sigma > 0.0)) throw ConfigError("tau_sigma must be positive");
}

TrainConfig TrainConfig::resolve(const LatticeSpec& lattice, std::size_t record_count) const {
    validate();
    TrainConfig out = *this;
    const double total_steps = static_cast<double>(epochs) * static_cast<double>(std::max<std::size_t>(record_count, 1));
    if (!out.sigma0) out.sigma0 = static_cast<double>(std::max(lattice.rows(), lattice.cols())) / 2.0;
    if (!out.tau_lr) out.tau_lr = total_steps / 4.0;
    if (!out.tau_sigma) out.tau_sigma = total_steps / 4.0;
    return out;
}

SomModel::SomModel(LatticeSpec lattice, std::size_t feature_count, std::vector<double> weights,
                   std::optional<NormalizationParams> normalization)
    : lattice_(lattice), m_(feature_count), weights_(std::move(weights)) {
    if (m_ == 0) throw ShapeError("feature count must be at least 1");
    if (weights_.size() != lattice_.neuron_count() * m_) {
        throw ShapeError("expected " + std::to_string(lattice_.neuron_count() * m_) + " weight components, got " +
                         std::to_string(weights_.size()));
    }
    if (!std::all_of(weights_.begin(), weights_.end(), [](double v) { return std::isfinite(v); })) {
        throw DataError("weights must be finite");
    }
    set_normalization(std::move(normalization));
}

std::span<const double> SomModel::weight(std::size_t j) const {
    if (j >= neuron_count()) throw IndexError("neuron index " + std::to_string(j) + " out of range");
    return std::span<const double>(weights_).subspan(j * m_, m_);
}

void SomModel::set_normalization(std::optional<NormalizationParams> p) {
    if (p && (p->min.size() != m_ || p->max.size() != m_)) {
        throw ShapeError("normalization parameters do not match feature count");
    }
    normalization_ = std::move(p);
}

SomModel init_weights(const LatticeSpec& lattice, std::size_t m, const TrainConfig& config,
                      const Dataset& data, Rng& rng) {
    if (m == 0) throw ConfigError("feature count must be at least 1");
    std::vector<double> w;
    w.reserve(lattice.neuron_count() * m);
    switch (config.init) {
    case InitScheme::UniformRandom:
        for (std::size_t i = 0; i < lattice.neuron_count() * m; ++i) w.push_back(rng.uniform01());
        break;
    case InitScheme::SampleDraw:
        if (data.empty()) throw ConfigError("sample-draw initialization needs a non-empty dataset");
        if (data.feature_count() != m) throw ShapeError("dataset width does not match feature count");
        for (std::size_t j = 0; j < lattice.neuron_count(); ++j) {
            const auto& x = data[static_cast<std::size_t>(rng.below(data.size()))].features;
            w.insert(w.end(), x.begin(), x.end());
        }
        break;
    }
    return SomModel(lattice, m, std::move(w));
}

SomModel init_weights(const LatticeSpec& lattice, std::size_t m, const TrainConfig& config,
                      const Dataset& data) {
    Rng rng(config.seed);
    return init_weights(lattice, m, config, data, rng);
}

namespace {

void check_input(const SomModel& model, std::span<const double> x) {
    if (x.size() != model.feature_count()) {
        throw ShapeError("input has " + std::to_string(x.size()) + " features, model expects " +
                         std::to_string(model.feature_count()));
    }
}

void check_dataset(const SomModel& model, const Dataset& data) {
    if (data.empty()) throw DataError("dataset is empty");
    if (data.feature_count() != model.feature_count()) {
        throw ShapeError("dataset has " + std::to_string(data.feature_count()) + " features, model expects " +
                         std::to_string(model.feature_count()));
    }
}

} // namespace

BmuMatch find_bmu(const SomModel& model, std::span<const double> x) {
    check_input(model, x);
    const auto b = kernels::find_bmu(model.weights(), model.feature_count(), x);
    return {b.index, std::sqrt(b.distance_sq)};
}

double neighborhood_value(double grid_dist, double sigma_t) {
    if (!(sigma_t > 0.0)) throw ConfigError("neighborhood radius must be positive");
    return kernels::gaussian(grid_dist * grid_dist, sigma_t);
}

double learning_rate_at(std::uint64_t t, const TrainConfig& config) {
    if (!config.tau_lr) throw ConfigError("tau_lr unresolved");
    return config.lr0 * std::exp(-static_cast<double>(t) / *config.tau_lr);
}

double sigma_at(std::uint64_t t, const TrainConfig& config) {
    if (!config.sigma0 || !config.tau_sigma) throw ConfigError("sigma schedule unresolved");
    return std::max(*config.sigma0 * std::exp(-static_cast<double>(t) / *config.tau_sigma), kSigmaFloor);
}

void update_weights(SomModel& model, std::span<const double> x, std::size_t bmu, double eta_t,
                    double sigma_t) {
    check_input(model, x);
    if (bmu >= model.neuron_count()) throw IndexError("BMU index out of range");
    if (!(eta_t > 0.0 && eta_t <= 1.0)) throw ConfigError("learning rate must lie in (0, 1]");
    if (!(sigma_t > 0.0)) throw ConfigError("neighborhood radius must be positive");
    kernels::update(model.mutable_weights(), model.feature_count(), model.lattice(), x, bmu, eta_t, sigma_t);
}

SomModel train(const Dataset& data, const LatticeSpec& lattice, const TrainConfig& config) {
    if (data.empty()) throw DataError("cannot train on an empty dataset");
    const TrainConfig cfg = config.resolve(lattice, data.size());
    const std::size_t m = data.feature_count();

    Rng rng(cfg.seed);
    SomModel model = init_weights(lattice, m, cfg, data, rng);

    const std::vector<double> samples = data.feature_matrix();
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    auto weights = model.mutable_weights();
    std::uint64_t t = 0;
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(std::span(order));
        for (std::size_t i : order) {
            const auto x = std::span<const double>(samples).subspan(i * m, m);
            const auto bmu = kernels::find_bmu(weights, m, x);
            kernels::update(weights, m, lattice, x, bmu.index, learning_rate_at(t, cfg), sigma_at(t, cfg));
            ++t;
        }
    }
    return model;
}

double quantization_error(const SomModel& model, const Dataset& data) {
    check_dataset(model, data);
    const auto samples = data.feature_matrix();
    const auto bmus = kernels::assign(model.weights(), model.feature_count(), samples);
    double sum = 0.0;
    for (const auto& b : bmus) sum += std::sqrt(b.distance_sq);
    return sum / static_cast<double>(bmus.size());
}

} // namespace som

namespace som {

Dataset to_model_space(const SomModel& model, const Dataset& data) {
    if (data.feature_count() != model.feature_count()) {
        throw ShapeError("dataset has " + std::to_string(data.feature_count()) + " features, model expects " +
                         std::to_string(model.feature_count()));
    }
    return model.normalization() ? apply_normalizer(*model.normalization(), data) : data;
}

} // namespace som
