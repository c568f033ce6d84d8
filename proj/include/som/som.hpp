#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "som/data.hpp"
#include "som/lattice.hpp"
#include "som/rng.hpp"

namespace som {

enum class InitScheme {
    UniformRandom, // each component drawn from [0, 1)
    SampleDraw,    // copies of training records picked uniformly with replacement
};

std::string_view to_string(InitScheme s);
// Accepts "uniform" and "sample". Throws ConfigError otherwise.
InitScheme parse_init_scheme(std::string_view s);

/// Training knobs. Unset optionals are derived from the lattice and data size
/// by resolve(): sigma0 = max(rows, cols) / 2, tau_lr = tau_sigma = total
/// update steps / 4.
struct TrainConfig {
    std::size_t epochs = 100;
    double lr0 = 0.5;
    std::optional<double> sigma0;
    std::optional<double> tau_lr;
    std::optional<double> tau_sigma;
    std::uint64_t seed = 42;
    InitScheme init = InitScheme::UniformRandom;

    // Copy with every optional filled in. Throws ConfigError on invalid values.
    TrainConfig resolve(const LatticeSpec& lattice, std::size_t record_count) const;
    void validate() const;
};

// Neighborhood radius never decays below this, in grid units.
inline constexpr double kSigmaFloor = 0.5;

/// Trained map: one weight vector of feature_count() reals per lattice neuron,
/// stored row-major by neuron index, plus the normalizer the inputs went
/// through (if any).
class SomModel {
public:
    // Throws ShapeError if weights.size() != neuron_count * m, DataError on
    // non-finite weights.
    SomModel(LatticeSpec lattice, std::size_t feature_count, std::vector<double> weights,
             std::optional<NormalizationParams> normalization = std::nullopt);

    const LatticeSpec& lattice() const noexcept { return lattice_; }
    std::size_t feature_count() const noexcept { return m_; }
    std::size_t neuron_count() const noexcept { return lattice_.neuron_count(); }

    std::span<const double> weights() const noexcept { return weights_; }
    std::span<double> mutable_weights() noexcept { return weights_; }
    std::span<const double> weight(std::size_t j) const;

    const std::optional<NormalizationParams>& normalization() const noexcept { return normalization_; }
    void set_normalization(std::optional<NormalizationParams> p);

    friend bool operator==(const SomModel&, const SomModel&) = default;

private:
    LatticeSpec lattice_;
    std::size_t m_;
    std::vector<double> weights_;
    std::optional<NormalizationParams> normalization_;
};

struct BmuMatch {
    std::size_t index;
    double distance;
};

SomModel init_weights(const LatticeSpec& lattice, std::size_t m, const TrainConfig& config,
                      const Dataset& data);
SomModel init_weights(const LatticeSpec& lattice, std::size_t m, const TrainConfig& config,
                      const Dataset& data, Rng& rng);

// Winning neuron argmin_j |x - w_j|, lowest index on ties.
BmuMatch find_bmu(const SomModel& model, std::span<const double> x);

// exp(-d^2 / (2 sigma^2)). Throws ConfigError when sigma_t <= 0.
double neighborhood_value(double grid_dist, double sigma_t);

// lr0 * exp(-t / tau_lr) and max(sigma0 * exp(-t / tau_sigma), 0.5). The
// config must be resolved.
double learning_rate_at(std::uint64_t t, const TrainConfig& config);
double sigma_at(std::uint64_t t, const TrainConfig& config);

// One Kohonen step toward x around the given winner.
void update_weights(SomModel& model, std::span<const double> x, std::size_t bmu, double eta_t,
                    double sigma_t);

// Online training: per epoch a fresh seeded permutation of the records, one
// competition/cooperation/adaptation step per record. Labels are ignored.
SomModel train(const Dataset& data, const LatticeSpec& lattice, const TrainConfig& config);

// Mean distance from each record to its best matching weight vector.
double quantization_error(const SomModel& model, const Dataset& data);

} // namespace som

namespace som {

// Applies the model's stored normalizer to data, or returns it unchanged when
// the model has none. Throws ShapeError on width mismatch.
Dataset to_model_space(const SomModel& model, const Dataset& data);

} // namespace som
