#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "som/errors.hpp"
#include "som/labeling.hpp"
#include "test_util.hpp"

using namespace som;
using som::testing::make_dataset;

namespace {

// Three scalar neurons at 0, 10, 20.
SomModel line3() { return SomModel(LatticeSpec(1, 3), 1, {0, 10, 20}); }

// Independent tally: plain arrays, explicit mode search over label values.
std::vector<LabelMap::Entry> brute_force_votes(const SomModel& model, const Dataset& data, ClassLabel max_label) {
    std::vector<std::vector<std::size_t>> counts(model.neuron_count(), std::vector<std::size_t>(max_label + 1, 0));
    for (const auto& r : data.records()) {
        counts[som::testing::brute_force_bmu(model, r.features)][*r.label]++;
    }
    std::vector<LabelMap::Entry> out(model.neuron_count());
    for (std::size_t j = 0; j < counts.size(); ++j) {
        std::size_t top = 0;
        for (std::size_t c : counts[j]) top = std::max(top, c);
        if (top == 0) continue;
        for (ClassLabel l = 0; l <= max_label; ++l) {
            if (counts[j][l] == top) {
                out[j] = l;
                break;
            }
        }
    }
    return out;
}

} // namespace

TEST(BuildLabelMap, Examples) {
    // Neuron 0 gets {0,0,1}, neuron 1 gets {0,1}, neuron 2 gets nothing.
    const auto data = make_dataset({{0.1}, {-0.2}, {0.3}, {9.5}, {10.5}}, {0, 0, 1, 1, 0});
    const auto lm = build_label_map(line3(), data);
    EXPECT_EQ(lm[0], ClassLabel{0});
    EXPECT_EQ(lm[1], ClassLabel{0});
    EXPECT_FALSE(lm[2].has_value());
    EXPECT_EQ(lm.labeled_count(), 2u);
}

TEST(BuildLabelMap, RejectsUnlabeledRecords) {
    const auto data = make_dataset({{0.1}, {0.2}}, {0, std::nullopt});
    EXPECT_THROW(build_label_map(line3(), data), DataError);
    EXPECT_THROW(build_label_map(line3(), make_dataset({{1, 2}}, {0})), ShapeError);
}

TEST(BuildLabelMap, MatchesBruteForceTallyAndIgnoresOrder) {
    Rng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const auto model = som::testing::random_model(rng, 1 + rng.below(4), 1 + rng.below(4), 1 + rng.below(3), true);
        const ClassLabel max_label = static_cast<ClassLabel>(1 + rng.below(3));
        const std::size_t n = rng.below(25);
        std::vector<std::vector<double>> rows;
        std::vector<std::optional<ClassLabel>> labels;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(som::testing::random_grid_vector(rng, model.feature_count()));
            labels.emplace_back(static_cast<ClassLabel>(rng.below(max_label + 1)));
        }
        const auto data = make_dataset(rows, labels, model.feature_count());
        const auto lm = build_label_map(model, data);
        ASSERT_EQ(lm.entries(), brute_force_votes(model, data, max_label));

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        rng.shuffle(std::span(perm));
        std::vector<std::vector<double>> rows2;
        std::vector<std::optional<ClassLabel>> labels2;
        for (auto p : perm) {
            rows2.push_back(rows[p]);
            labels2.push_back(labels[p]);
        }
        ASSERT_EQ(build_label_map(model, make_dataset(rows2, labels2, model.feature_count())), lm);
    }
}

TEST(Predict, DirectAndFallback) {
    const auto model = line3();
    const LabelMap lm(model.lattice(), {ClassLabel{0}, std::nullopt, ClassLabel{1}});
    EXPECT_EQ(predict_one(model, lm, std::vector<double>{19}), 1u);
    // BMU is the unlabeled middle neuron; 0 is closer than 20.
    EXPECT_EQ(predict_one(model, lm, std::vector<double>{9}), 0u);
    EXPECT_EQ(predict_one(model, lm, std::vector<double>{11}), 1u);
    // Exactly halfway between labeled neighbours: lower index wins.
    EXPECT_EQ(predict_one(model, lm, std::vector<double>{10}), 0u);
}

TEST(Predict, SingleNeuron) {
    const SomModel model(LatticeSpec(1, 1), 2, {0.5, 0.5});
    const LabelMap lm(model.lattice(), {ClassLabel{1}});
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        EXPECT_EQ(predict_one(model, lm, som::testing::random_vector(rng, 2, -5, 5)), 1u);
    }
}

TEST(Predict, Errors) {
    const auto model = line3();
    const LabelMap empty(model.lattice(), {std::nullopt, std::nullopt, std::nullopt});
    EXPECT_THROW(predict_one(model, empty, std::vector<double>{1}), StateError);
    EXPECT_THROW(predict_batch(model, empty, make_dataset({{1}})), StateError);
    const LabelMap wrong(LatticeSpec(3, 1), {ClassLabel{0}, ClassLabel{0}, ClassLabel{0}});
    EXPECT_THROW(predict_one(model, wrong, std::vector<double>{1}), ShapeError);
    EXPECT_THROW(LabelMap(LatticeSpec(2, 2), {ClassLabel{0}}), ShapeError);
}

TEST(Predict, BatchMatchesElementwise) {
    Rng rng(31);
    const auto model = som::testing::random_model(rng, 5, 5, 3);
    std::vector<LabelMap::Entry> entries(25);
    for (auto& e : entries) {
        if (rng.uniform01() < 0.6) e = static_cast<ClassLabel>(rng.below(3));
    }
    entries[0] = ClassLabel{2};
    const LabelMap lm(model.lattice(), entries);

    EXPECT_TRUE(predict_batch(model, lm, make_dataset({})).empty());

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 200; ++i) rows.push_back(som::testing::random_vector(rng, 3));
    const auto data = make_dataset(rows);
    const auto batch = predict_batch(model, lm, data);
    ASSERT_EQ(batch.size(), data.size());
    for (std::size_t i = 0; i < data.size(); ++i) EXPECT_EQ(batch[i], predict_one(model, lm, data[i].features));
}
