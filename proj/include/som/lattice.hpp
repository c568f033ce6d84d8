#pragma once

#include <cstddef>
#include <compare>

namespace som {

/// Row-major position of a neuron on the output lattice.
struct GridCoord {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// Rectangular output lattice. A one-dimensional map is rows == 1.
class LatticeSpec {
public:
    // Throws ConfigError unless rows >= 1 and cols >= 1.
    LatticeSpec(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t neuron_count() const noexcept { return rows_ * cols_; }

    bool contains(GridCoord c) const noexcept { return c.row < rows_ && c.col < cols_; }

    // Throws IndexError when j >= neuron_count().
    GridCoord coord_of(std::size_t j) const;
    // Inverse of coord_of. Throws IndexError for coordinates outside the grid.
    std::size_t index_of(GridCoord c) const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
};

// Euclidean distance between integer grid positions.
double grid_distance(const LatticeSpec& spec, GridCoord a, GridCoord b);

// Squared grid distance between two neurons by index; no range check.
inline double grid_distance_sq(const LatticeSpec& spec, std::size_t a, std::size_t b) noexcept {
    const auto cols = spec.cols();
    const double dr = static_cast<double>(a / cols) - static_cast<double>(b / cols);
    const double dc = static_cast<double>(a % cols) - static_cast<double>(b % cols);
    return dr * dr + dc * dc;
}

} // namespace som
