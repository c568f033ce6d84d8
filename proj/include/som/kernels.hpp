#pragma once

// Inner loops of training and inference over a flat, row-major weight array
// (neuron_count x m). Each kernel has a serial reference and an OpenMP version;
// the two return bit-identical results for every input, which the test suite
// checks. The unqualified entry points pick one by problem size.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "som/lattice.hpp"

namespace som::kernels {

struct Bmu {
    std::size_t index = 0;
    double distance_sq = 0.0;
};

// Gaussian neighborhood exp(-d^2 / (2 sigma^2)) given the squared grid distance.
inline double gaussian(double grid_dist_sq, double sigma) noexcept {
    return std::exp(-grid_dist_sq / (2.0 * sigma * sigma));
}

// Squared Euclidean distance, accumulated in index order.
inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

// Below this many weight components (neurons x m) the dispatchers stay serial.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {
// argmin_j |x - w_j|, ties to the smallest j.
Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x);
// w_j += eta * h(grid_dist(j, bmu), sigma) * (x - w_j) for every neuron j.
void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma);
// One BMU per row of the n x m sample matrix.
std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples);
// Mean weight distance to 4-connected lattice neighbours, per neuron.
std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice);
} // namespace serial

namespace omp {
Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x);
void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma);
std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples);
std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice);
} // namespace omp

Bmu find_bmu(std::span<const double> weights, std::size_t m, std::span<const double> x);
void update(std::span<double> weights, std::size_t m, const LatticeSpec& lattice,
            std::span<const double> x, std::size_t bmu, double eta, double sigma);
std::vector<Bmu> assign(std::span<const double> weights, std::size_t m, std::span<const double> samples);
std::vector<double> u_matrix(std::span<const double> weights, std::size_t m, const LatticeSpec& lattice);

} // namespace som::kernels
