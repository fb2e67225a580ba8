#include "necoc/learners.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "necoc/rng.hpp"

namespace necoc {

namespace {

double gini(std::span<const long> counts, long total) {
    if (total == 0) return 0.0;
    double sum_sq = 0.0;
    for (long c : counts) sum_sq += static_cast<double>(c) * c;
    return 1.0 - sum_sq / (static_cast<double>(total) * total);
}

struct SplitChoice {
    int feature = -1;
    double threshold = 0.0;
    double impurity = std::numeric_limits<double>::infinity();  // weighted child Gini
};

}  // namespace

std::unique_ptr<DecisionTree> DecisionTree::fit(const Dataset& data,
                                                std::span<const int> sample_indices,
                                                std::span<const int> targets, int num_targets,
                                                std::uint64_t seed) {
    if (sample_indices.size() != targets.size())
        throw std::invalid_argument("sample/target count mismatch");
    if (sample_indices.empty()) throw std::invalid_argument("cannot fit an empty tree");

    auto tree = std::make_unique<DecisionTree>();
    Rng rng(seed);

    struct Work {
        std::vector<int> positions;  // indices into sample_indices/targets
        int node;
    };

    const auto feature_at = [&](int pos, int f) {
        return data.sample(sample_indices[pos])[f];
    };

    std::vector<int> all(sample_indices.size());
    std::iota(all.begin(), all.end(), 0);
    tree->nodes_.emplace_back();
    std::vector<Work> stack;
    stack.push_back({std::move(all), 0});

    std::vector<long> total_counts(num_targets);
    std::vector<long> left_counts(num_targets);
    std::vector<int> feature_order(data.dims);
    std::vector<int> sorted;

    while (!stack.empty()) {
        Work work = std::move(stack.back());
        stack.pop_back();
        Node& node = tree->nodes_[work.node];

        std::fill(total_counts.begin(), total_counts.end(), 0);
        for (int pos : work.positions) ++total_counts[targets[pos]];
        const long total = static_cast<long>(work.positions.size());

        // Majority label, smallest symbol on ties.
        int majority = 0;
        for (int t = 1; t < num_targets; ++t)
            if (total_counts[t] > total_counts[majority]) majority = t;
        node.label = majority;

        const double node_impurity = gini(total_counts, total);
        if (node_impurity <= 0.0 || total < 2) continue;  // pure or unsplittable leaf

        std::iota(feature_order.begin(), feature_order.end(), 0);
        rng.shuffle(feature_order);

        SplitChoice best;
        for (int f : feature_order) {
            sorted = work.positions;
            std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
                const double va = feature_at(a, f), vb = feature_at(b, f);
                return va < vb || (va == vb && a < b);
            });
            std::fill(left_counts.begin(), left_counts.end(), 0);
            long n_left = 0;
            for (std::size_t t = 0; t + 1 < sorted.size(); ++t) {
                ++left_counts[targets[sorted[t]]];
                ++n_left;
                const double v = feature_at(sorted[t], f);
                const double next = feature_at(sorted[t + 1], f);
                if (v == next) continue;  // split only between distinct values
                double weighted = 0.0;
                {
                    double sum_sq = 0.0;
                    for (int c = 0; c < num_targets; ++c) {
                        const double l = static_cast<double>(left_counts[c]);
                        sum_sq += l * l;
                    }
                    weighted += n_left - sum_sq / n_left;
                }
                {
                    const long n_right = total - n_left;
                    double sum_sq = 0.0;
                    for (int c = 0; c < num_targets; ++c) {
                        const double r = static_cast<double>(total_counts[c] - left_counts[c]);
                        sum_sq += r * r;
                    }
                    weighted += n_right - sum_sq / n_right;
                }
                weighted /= total;  // weighted Gini of the two children
                if (weighted < best.impurity - 1e-12) {
                    best.impurity = weighted;
                    best.feature = f;
                    best.threshold = v + (next - v) / 2;
                }
            }
        }

        // Split whenever the node is impure and some boundary exists, even at
        // zero impurity decrease; both children shrink, so recursion ends.
        if (best.feature < 0) continue;

        std::vector<int> left_pos, right_pos;
        for (int pos : work.positions) {
            if (feature_at(pos, best.feature) <= best.threshold)
                left_pos.push_back(pos);
            else
                right_pos.push_back(pos);
        }
        if (left_pos.empty() || right_pos.empty()) continue;  // degenerate threshold

        const int left_id = static_cast<int>(tree->nodes_.size());
        tree->nodes_.emplace_back();
        const int right_id = static_cast<int>(tree->nodes_.size());
        tree->nodes_.emplace_back();
        Node& n = tree->nodes_[work.node];  // emplace may have reallocated
        n.feature = best.feature;
        n.threshold = best.threshold;
        n.left = left_id;
        n.right = right_id;
        stack.push_back({std::move(right_pos), right_id});
        stack.push_back({std::move(left_pos), left_id});
    }
    return tree;
}

int DecisionTree::predict(std::span<const double> x) const {
    int at = 0;
    while (nodes_[at].feature >= 0)
        at = x[nodes_[at].feature] <= nodes_[at].threshold ? nodes_[at].left : nodes_[at].right;
    return nodes_[at].label;
}

std::unique_ptr<NearestCentroid> NearestCentroid::fit(const Dataset& data,
                                                      std::span<const int> sample_indices,
                                                      std::span<const int> targets,
                                                      int num_targets) {
    if (sample_indices.size() != targets.size())
        throw std::invalid_argument("sample/target count mismatch");
    if (sample_indices.empty()) throw std::invalid_argument("cannot fit an empty model");
    auto model = std::make_unique<NearestCentroid>();
    model->dims_ = data.dims;
    model->centroids_.assign(static_cast<std::size_t>(num_targets) * data.dims, 0.0);
    model->present_.assign(num_targets, false);
    std::vector<long> counts(num_targets, 0);
    for (std::size_t t = 0; t < sample_indices.size(); ++t) {
        const auto x = data.sample(sample_indices[t]);
        const int c = targets[t];
        ++counts[c];
        model->present_[c] = true;
        for (int f = 0; f < data.dims; ++f)
            model->centroids_[static_cast<std::size_t>(c) * data.dims + f] += x[f];
    }
    for (int c = 0; c < num_targets; ++c)
        if (counts[c])
            for (int f = 0; f < data.dims; ++f)
                model->centroids_[static_cast<std::size_t>(c) * data.dims + f] /= counts[c];
    return model;
}

int NearestCentroid::predict(std::span<const double> x) const {
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    const int num = static_cast<int>(present_.size());
    for (int c = 0; c < num; ++c) {
        if (!present_[c]) continue;
        double d2 = 0.0;
        const double* ctr = centroids_.data() + static_cast<std::size_t>(c) * dims_;
        for (int f = 0; f < dims_; ++f) d2 += (x[f] - ctr[f]) * (x[f] - ctr[f]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = c;
        }
    }
    return best;
}

std::unique_ptr<ColumnModel> train_column(const LearnerSpec& spec, const Dataset& data,
                                          std::span<const int> sample_indices,
                                          std::span<const int> targets, int num_targets,
                                          std::uint64_t seed) {
    switch (spec.kind) {
        case LearnerSpec::Kind::decision_tree:
            return DecisionTree::fit(data, sample_indices, targets, num_targets, seed);
        case LearnerSpec::Kind::nearest_centroid:
            return NearestCentroid::fit(data, sample_indices, targets, num_targets);
    }
    throw std::logic_error("unknown learner kind");
}

}  // namespace necoc
