#include "som/lattice.hpp"

#include <cmath>
#include <string>

#include "som/errors.hpp"

namespace som {

LatticeSpec::LatticeSpec(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
        throw ConfigError("lattice dimensions must be positive, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    }
}

GridCoord LatticeSpec::coord_of(std::size_t j) const {
    if (j >= neuron_count()) {
        throw IndexError("neuron index " + std::to_string(j) + " out of range for " +
                         std::to_string(neuron_count()) + " neurons");
    }
    return {j / cols_, j % cols_};
}

std::size_t LatticeSpec::index_of(GridCoord c) const {
    if (!contains(c)) {
        throw IndexError("grid coordinate (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                         ") outside lattice");
    }
    return c.row * cols_ + c.col;
}

double grid_distance(const LatticeSpec& spec, GridCoord a, GridCoord b) {
    if (!spec.contains(a) || !spec.contains(b)) {
        throw IndexError("grid coordinate outside lattice");
    }
    const double dr = static_cast<double>(a.row) - static_cast<double>(b.row);
    const double dc = static_cast<double>(a.col) - static_cast<double>(b.col);
    return std::sqrt(dr * dr + dc * dc);
}

} // namespace som
