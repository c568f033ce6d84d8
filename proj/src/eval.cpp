#include "som/eval.hpp"

#include <algorithm>

#include "som/errors.hpp"
#include "som/kernels.hpp"

namespace som {

EvalReport score(const std::vector<ClassLabel>& truth, const std::vector<ClassLabel>& predicted) {
    if (truth.size() != predicted.size()) throw ShapeError("label sequences differ in length");
    if (truth.empty()) throw DataError("nothing to evaluate");

    ClassLabel top = 0;
    for (auto v : truth) top = std::max(top, v);
    for (auto v : predicted) top = std::max(top, v);

    EvalReport r;
    r.total = truth.size();
    r.confusion.assign(top + 1, std::vector<std::size_t>(top + 1, 0));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++r.confusion[truth[i]][predicted[i]];
        if (truth[i] == predicted[i]) ++r.correct;
    }
    r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.total);
    return r;
}

EvalReport evaluate(const SomModel& model, const LabelMap& labels, const Dataset& test) {
    if (test.empty()) throw DataError("test dataset is empty");
    std::vector<ClassLabel> truth;
    truth.reserve(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        if (!test[i].label) throw DataError("test record " + std::to_string(i) + " has no label");
        truth.push_back(*test[i].label);
    }
    return score(truth, predict_batch(model, labels, test));
}

UMatrix u_matrix(const SomModel& model) {
    return {model.lattice(), kernels::u_matrix(model.weights(), model.feature_count(), model.lattice())};
}

} // namespace som
