#include "som/kernels.hpp"

#include <cstdint>
#include <limits>

namespace som::kernels {

namespace {

inline std::span<const double> row(std::span<const double> flat, std::size_t m, std::size_t i) {
    return flat.subspan(i * m, m);
}

inline bool better(double d, std::size_t j, const Bmu& best) {
    return d < best.distance_sq || (d == best.distance_sq && j < best.index);
}

// Per-neuron step shared by both update kernels so their arithmetic matches.
// Per-neuron step shared by both update kernels so their arithmetic matches.
inline void step_neuron(double* w, std::span<const double> x, double s) {
    if (s == 1.0) {
        for (std::size_t k = 0; k < x.size(); ++k) w[k] = x[k];
        return;
    }
    for (std::size_t k = 0; k < x.size(); ++k) w[k] += s * (x[k] - w[k]);
}

inline double u_value(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice,
                      std::size_t j) {
    const std::size_t r = j / lattice.cols();
    const std::size_t c = j % lattice.cols();
    const auto wj = row(weights, m, j);
    double sum = 0.0;
    int count = 0;
    auto visit = [&](std::size_t nb) {
        sum += std::sqrt(squared_distance(wj, row(weights, m, nb)));
        ++count;
    };
    if (r > 0) visit(j - lattice.cols());
    if (c > 0) visit(j - 1);
    if (c + 1 < lattice.cols()) visit(j + 1);
    if (r + 1 < lattice.rows()) visit(j + lattice.cols());
    return count ? sum / count : 0.0;
}

} // namespace

namespace serial {

Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x) {
    const std::size_t l = weights.size() / m;
    Bmu best{0, std::numeric_limits<double>::infinity()};
    for (std::size_t j = 0; j < l; ++j) {
        const double d = squared_distance(x, row(weights, m, j));
        if (d < best.distance_sq) best = {j, d};
    }
    return best;
}

void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma) {
    const std::size_t l = lattice.neuron_count();
    for (std::size_t j = 0; j < l; ++j) {
        const double s = eta * gaussian(grid_distance_sq(lattice, j, bmu), sigma);
        step_neuron(weights.data() + j * m, x, s);
    }
}

std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples) {
    const std::size_t n = samples.size() / m;
    std::vector<Bmu> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = find_bmu(weights, m, row(samples, m, i));
    return out;
}

std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice) {
    std::vector<double> out(lattice.neuron_count());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = u_value(weights, m, lattice, j);
    return out;
}

} // namespace serial

namespace omp {

Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x) {
    const auto l = static_cast<std::int64_t>(weights.size() / m);
    Bmu best{0, std::numeric_limits<double>::infinity()};
#pragma omp parallel
    {
        Bmu local{0, std::numeric_limits<double>::infinity()};
#pragma omp for schedule(static) nowait
        for (std::int64_t j = 0; j < l; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double d = squared_distance(x, row(weights, m, ju));
            if (better(d, ju, local)) local = {ju, d};
        }
#pragma omp critical(som_bmu_reduce)
        if (better(local.distance_sq, local.index, best)) best = local;
    }
    return best;
}

void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma) {
    const auto l = static_cast<std::int64_t>(lattice.neuron_count());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < l; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const double s = eta * gaussian(grid_distance_sq(lattice, ju, bmu), sigma);
        step_neuron(weights.data() + ju * m, x, s);
    }
}

std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples) {
    const auto n = static_cast<std::int64_t>(samples.size() / m);
    std::vector<Bmu> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        out[iu] = serial::find_bmu(weights, m, row(samples, m, iu));
    }
    return out;
}

std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice) {
    const auto l = static_cast<std::int64_t>(lattice.neuron_count());
    std::vector<double> out(static_cast<std::size_t>(l));
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < l; ++j) {
        out[static_cast<std::size_t>(j)] = u_value(weights, m, lattice, static_cast<std::size_t>(j));
    }
    return out;
}

} // namespace omp

Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x) {
    return weights.size() >= kParallelThreshold ? omp::find_bmu(weights, m, x)
                                                : serial::find_bmu(weights, m, x);
}

void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma) {
    if (weights.size() >= kParallelThreshold) {
        omp::update(weights, m, lattice, x, bmu, eta, sigma);
    } else {
        serial::update(weights, m, lattice, x, bmu, eta, sigma);
    }
}

std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples) {
    return weights.size() * (samples.size() / m) >= kParallelThreshold ? omp::assign(weights, m, samples)
                                                                       : serial::assign(weights, m, samples);
}

std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice) {
    return weights.size() >= kParallelThreshold ? omp::u_matrix(weights, m, lattice)
                                                : serial::u_matrix(weights, m, lattice);
}

} // namespace som::kernels
