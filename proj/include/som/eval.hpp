#pragma once

#include <cstddef>
#include <vector>

#include "som/data.hpp"
#include "som/labeling.hpp"
#include "som/lattice.hpp"
#include "som/som.hpp"

namespace som {

struct EvalReport {
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;
    // confusion[true_label][predicted_label]; square, sized to the largest
    // label seen plus one.
    std::vector<std::vector<std::size_t>> confusion;
};

// Scores predict_batch against the records' labels. Throws DataError on an
// empty dataset or any unlabeled record.
EvalReport evaluate(const SomModel& model, const LabelMap& labels, const Dataset& test);

// Builds the report from parallel label sequences.
EvalReport score(const std::vector<ClassLabel>& truth, const std::vector<ClassLabel>& predicted);

struct UMatrix {
    LatticeSpec lattice;
    std::vector<double> values;
};

// Mean weight-space distance from each neuron to its 4-connected neighbours;
// 0 for a neuron without neighbours.
UMatrix u_matrix(const SomModel& model);

} // namespace som
