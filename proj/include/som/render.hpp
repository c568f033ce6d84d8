#pragma once

#include <string>

#include "som/eval.hpp"
#include "som/labeling.hpp"

namespace som {

// One line per lattice row, one character per neuron: the label digit, or '.'
// for unlabeled neurons. Labels above 9 render as '+'.
std::string render_label_map_text(const LabelMap& labels);

// One line per lattice row, values with 6 decimals separated by single spaces.
std::string render_umatrix_text(const UMatrix& u);

// Binary PGM ("P5", maxval 255), width = cols, height = rows. Values are
// min-max scaled to 0..255 and rounded; all-equal values give all zeros.
std::string render_umatrix_pgm(const UMatrix& u);

// Binary PGM of the label map: unlabeled = 0, label k = round(255 (k+1) / (K+1))
// where K is the largest label present.
std::string render_label_map_pgm(const LabelMap& labels);

} // namespace som
