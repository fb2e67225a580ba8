#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "necoc/learners.hpp"

using namespace necoc;

namespace {

Dataset tiny(std::vector<std::vector<double>> rows, std::vector<int> labels, int classes) {
    Dataset d;
    d.name = "tiny";
    d.samples = static_cast<int>(rows.size());
    d.dims = static_cast<int>(rows.front().size());
    d.classes = classes;
    for (const auto& r : rows) d.features.insert(d.features.end(), r.begin(), r.end());
    d.labels = std::move(labels);
    for (int c = 0; c < classes; ++c) d.label_names.push_back(c);
    return d;
}

std::vector<int> all_indices(const Dataset& d) {
    std::vector<int> idx(d.samples);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

}  // namespace

TEST_CASE("a pure node is a single leaf") {
    const Dataset d = tiny({{0.0}, {1.0}, {2.0}}, {1, 1, 1}, 2);
    const auto idx = all_indices(d);
    const auto tree = DecisionTree::fit(d, idx, d.labels, 2, 0);
    CHECK(tree->node_count() == 1);
    CHECK(tree->predict(std::vector<double>{5.0}) == 1);
}

TEST_CASE("trees interpolate separable training data") {
    const Dataset d = tiny({{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}},
                           {0, 1, 1, 0}, 2);  // XOR needs depth 2
    const auto idx = all_indices(d);
    const auto tree = DecisionTree::fit(d, idx, d.labels, 2, 1);
    for (int i = 0; i < d.samples; ++i)
        CHECK(tree->predict(d.sample(i)) == d.labels[i]);
}

TEST_CASE("identical features with mixed labels fall back to the majority") {
    const Dataset d = tiny({{1.0}, {1.0}, {1.0}}, {0, 1, 1}, 2);
    const auto idx = all_indices(d);
    const auto tree = DecisionTree::fit(d, idx, d.labels, 2, 0);
    CHECK(tree->node_count() == 1);
    CHECK(tree->predict(std::vector<double>{1.0}) == 1);
}

TEST_CASE("majority ties go to the smallest symbol") {
    const Dataset d = tiny({{1.0}, {1.0}}, {2, 1}, 3);
    const auto idx = all_indices(d);
    const auto tree = DecisionTree::fit(d, idx, d.labels, 3, 0);
    CHECK(tree->predict(std::vector<double>{1.0}) == 1);
}

TEST_CASE("training is deterministic per seed") {
    const Dataset d = make_blobs(3, 40, 4, 6.0, 21);
    const auto idx = all_indices(d);
    const auto a = DecisionTree::fit(d, idx, d.labels, 3, 9);
    const auto b = DecisionTree::fit(d, idx, d.labels, 3, 9);
    CHECK(a->node_count() == b->node_count());
    for (int i = 0; i < d.samples; ++i)
        CHECK(a->predict(d.sample(i)) == b->predict(d.sample(i)));
}

TEST_CASE("trees fit well separated blobs exactly on the training set") {
    const Dataset d = make_blobs(4, 50, 3, 10.0, 33);
    const auto idx = all_indices(d);
    const auto tree = DecisionTree::fit(d, idx, d.labels, 4, 2);
    for (int i = 0; i < d.samples; ++i)
        CHECK(tree->predict(d.sample(i)) == d.labels[i]);
}

TEST_CASE("nearest centroid separates clear clusters") {
    const Dataset d = tiny({{0.0, 0.0}, {0.2, 0.0}, {5.0, 5.0}, {5.2, 5.0}},
                           {0, 0, 1, 1}, 2);
    const auto idx = all_indices(d);
    const auto model = NearestCentroid::fit(d, idx, d.labels, 2);
    CHECK(model->predict(std::vector<double>{0.1, 0.1}) == 0);
    CHECK(model->predict(std::vector<double>{5.0, 4.9}) == 1);
}

TEST_CASE("centroid distance ties resolve to the smallest symbol") {
    const Dataset d = tiny({{0.0}, {2.0}}, {0, 1}, 2);
    const auto idx = all_indices(d);
    const auto model = NearestCentroid::fit(d, idx, d.labels, 2);
    CHECK(model->predict(std::vector<double>{1.0}) == 0);  // equidistant
}

TEST_CASE("constant model always answers its symbol") {
    const ConstantModel m(2);
    CHECK(m.predict(std::vector<double>{1.0, 2.0}) == 2);
}

TEST_CASE("train_column dispatches on the spec") {
    const Dataset d = tiny({{0.0}, {1.0}, {4.0}, {5.0}}, {0, 0, 1, 1}, 2);
    const auto idx = all_indices(d);
    const auto dt = train_column(LearnerSpec::decision_tree(), d, idx, d.labels, 2, 0);
    const auto nc = train_column(LearnerSpec::nearest_centroid(), d, idx, d.labels, 2, 0);
    CHECK(dt->predict(std::vector<double>{0.5}) == 0);
    CHECK(nc->predict(std::vector<double>{4.5}) == 1);
}
