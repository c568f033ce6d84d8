#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "som/data.hpp"
#include "som/lattice.hpp"
#include "som/som.hpp"

namespace som {

/// One class label per neuron, or nullopt for neurons no training record
/// mapped to.
class LabelMap {
public:
    using Entry = std::optional<ClassLabel>;

    // Throws ShapeError unless entries.size() == lattice.neuron_count().
    LabelMap(LatticeSpec lattice, std::vector<Entry> entries);

    const LatticeSpec& lattice() const noexcept { return lattice_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const Entry& operator[](std::size_t j) const { return entries_.at(j); }

    std::size_t labeled_count() const noexcept;

    friend bool operator==(const LabelMap&, const LabelMap&) = default;

private:
    LatticeSpec lattice_;
    std::vector<Entry> entries_;
};

// Each record votes for its BMU; a neuron takes the most frequent label among
// its voters, the smaller label on ties. Throws DataError if any record is
// unlabeled.
LabelMap build_label_map(const SomModel& model, const Dataset& labeled);

// Label of the BMU, or when the BMU is unlabeled, of the labeled neuron whose
// weights are closest to x (lowest index on ties). Throws StateError when no
// neuron is labeled.
ClassLabel predict_one(const SomModel& model, const LabelMap& labels, std::span<const double> x);

// predict_one over every record, in order.
std::vector<ClassLabel> predict_batch(const SomModel& model, const LabelMap& labels, const Dataset& data);

} // namespace som
