#ifndef NECOC_LEARNERS_HPP
#define NECOC_LEARNERS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "necoc/dataset.hpp"

namespace necoc {

struct LearnerSpec {
    enum class Kind { decision_tree, nearest_centroid } kind = Kind::decision_tree;
    static LearnerSpec decision_tree() { return {Kind::decision_tree}; }
    static LearnerSpec nearest_centroid() { return {Kind::nearest_centroid}; }
    const char* name() const {
        return kind == Kind::decision_tree ? "dt" : "centroid";
    }
};

// A trained per-column predictor: feature vector -> superclass symbol.
class ColumnModel {
public:
    virtual ~ColumnModel() = default;
    virtual int predict(std::span<const double> x) const = 0;
};

// CART classification tree: Gini impurity, best split over all features,
// unbounded depth, min one sample per leaf. Features are visited in a seeded
// shuffled order at every node, so equal-gain ties resolve deterministically
// per seed.
class DecisionTree : public ColumnModel {
public:
    static std::unique_ptr<DecisionTree> fit(const Dataset& data,
                                             std::span<const int> sample_indices,
                                             std::span<const int> targets, int num_targets,
                                             std::uint64_t seed);
    int predict(std::span<const double> x) const override;
    int node_count() const { return static_cast<int>(nodes_.size()); }

private:
    struct Node {
        int feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        int label = 0;
    };
    std::vector<Node> nodes_;
};

// Per-symbol mean feature vectors; predicts the nearest centroid by squared
// Euclidean distance, ties to the smallest symbol.
class NearestCentroid : public ColumnModel {
public:
    static std::unique_ptr<NearestCentroid> fit(const Dataset& data,
                                                std::span<const int> sample_indices,
                                                std::span<const int> targets, int num_targets);
    int predict(std::span<const double> x) const override;

private:
    int dims_ = 0;
    std::vector<double> centroids_;  // num_targets x dims, row-major
    std::vector<bool> present_;
};

// Always answers the same symbol; used for columns whose relabeled targets
// are constant.
class ConstantModel : public ColumnModel {
public:
    explicit ConstantModel(int label) : label_(label) {}
    int predict(std::span<const double>) const override { return label_; }

private:
    int label_;
};

std::unique_ptr<ColumnModel> train_column(const LearnerSpec& spec, const Dataset& data,
                                          std::span<const int> sample_indices,
                                          std::span<const int> targets, int num_targets,
                                          std::uint64_t seed);

}  // namespace necoc

#endif
