#pragma once

#include <optional>
#include <string>
#include <vector>

#include "som/labeling.hpp"
#include "som/som.hpp"

namespace som {

inline constexpr int kModelFormatVersion = 1;

/// Everything the CLI persists after training.
///
/// JSON layout (keys in this order):
///   format_version   1; readers reject larger values
///   lattice          {"rows": R, "cols": C}
///   feature_count    m
///   feature_names    [m strings]
///   weights          R*C arrays of m numbers, row-major neuron order
///   normalization    {"min": [m], "max": [m]} or null
///   label_map        R*C entries, integer or null (key absent without labels)
///   train_config     {"epochs", "lr0", "sigma0", "tau_lr", "tau_sigma", "seed", "init"}
/// Numbers are written in shortest round-trip form, so equal models give
/// byte-identical files.
struct ModelFile {
    SomModel model;
    std::vector<std::string> feature_names;
    std::optional<LabelMap> label_map;
    TrainConfig config;
};

std::string to_json(const ModelFile& file);
// Throws ParseError on malformed input or unsupported versions, ShapeError on
// inconsistent counts.
ModelFile model_from_json(const std::string& text);

void save_model(const ModelFile& file, const std::string& path);
ModelFile load_model(const std::string& path);

} // namespace som
