#include "som/labeling.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "som/errors.hpp"
#include "som/kernels.hpp"

namespace som {

LabelMap::LabelMap(LatticeSpec lattice, std::vector<Entry> entries)
    : lattice_(lattice), entries_(std::move(entries)) {
    if (entries_.size() != lattice_.neuron_count()) {
        throw ShapeError("label map has " + std::to_string(entries_.size()) + " entries for " +
                         std::to_string(lattice_.neuron_count()) + " neurons");
    }
}

std::size_t LabelMap::labeled_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                  [](const Entry& e) { return e.has_value(); }));
}

LabelMap build_label_map(const SomModel& model, const Dataset& labeled) {
    if (labeled.feature_count() != model.feature_count()) {
        throw ShapeError("dataset width does not match model");
    }
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (!labeled[i].label) throw DataError("record " + std::to_string(i) + " has no label");
    }

    const auto samples = labeled.feature_matrix();
    const auto bmus = kernels::assign(model.weights(), model.feature_count(), samples);

    std::vector<std::map<ClassLabel, std::size_t>> votes(model.neuron_count());
    for (std::size_t i = 0; i < bmus.size(); ++i) ++votes[bmus[i].index][*labeled[i].label];

    std::vector<LabelMap::Entry> entries(model.neuron_count());
    for (std::size_t j = 0; j < votes.size(); ++j) {
        std::size_t best = 0;
        // std::map iterates labels ascending, so '>' keeps the smaller label on ties.
        for (const auto& [label, count] : votes[j]) {
            if (count > best) {
                best = count;
                entries[j] = label;
            }
        }
    }
    return LabelMap(model.lattice(), std::move(entries));
}

namespace {

void check_compatible(const SomModel& model, const LabelMap& labels) {
    if (!(labels.lattice() == model.lattice())) throw ShapeError("label map lattice does not match model");
    if (labels.labeled_count() == 0) throw StateError("label map has no labeled neurons");
}

ClassLabel resolve(const SomModel& model, const LabelMap& labels, std::span<const double> x, std::size_t bmu) {
    if (const auto& e = labels[bmu]) return *e;
    const std::size_t m = model.feature_count();
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < model.neuron_count(); ++j) {
        if (!labels[j]) continue;
        const double d = kernels::squared_distance(x, model.weights().subspan(j * m, m));
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return *labels[best];
}

} // namespace

ClassLabel predict_one(const SomModel& model, const LabelMap& labels, std::span<const double> x) {
    check_compatible(model, labels);
    const auto bmu = find_bmu(model, x);
    return resolve(model, labels, x, bmu.index);
}

std::vector<ClassLabel> predict_batch(const SomModel& model, const LabelMap& labels, const Dataset& data) {
    if (data.empty()) return {};
    try {
        check_compatible(model, labels);
    } catch (const StateError& e) {
        throw StateError("record 0: " + std::string(e.what()));
    }
    if (data.feature_count() != model.feature_count()) {
        throw ShapeError("record 0: input has " + std::to_string(data.feature_count()) +
                         " features, model expects " + std::to_string(model.feature_count()));
    }
    const std::size_t m = model.feature_count();
    const auto samples = data.feature_matrix();
    const auto bmus = kernels::assign(model.weights(), m, samples);
    std::vector<ClassLabel> out(data.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = resolve(model, labels, std::span<const double>(samples).subspan(i * m, m), bmus[i].index);
    }
    return out;
}

} // namespace som
