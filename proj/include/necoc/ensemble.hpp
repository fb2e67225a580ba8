#ifndef NECOC_ENSEMBLE_HPP
#define NECOC_ENSEMBLE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "necoc/dataset.hpp"
#include "necoc/learners.hpp"
#include "necoc/matrix.hpp"
#include "necoc/metrics.hpp"

namespace necoc {

// Class labels -> superclass symbols through one codebook column.
std::vector<int> relabel(std::span<const int> labels, std::span<const Symbol> column);

struct Prediction {
    int label = 0;
    std::vector<Symbol> codeword;  // assembled learner outputs
    long margin = 0;               // second-best distance minus best
};

struct TrainReport {
    std::vector<int> constant_columns;  // learners degraded to constants
};

// Nearest-codeword decoding against a codebook; ties break to the smallest
// class index and the margin is the runner-up gap.
Prediction decode_nearest(const CodingMatrix& codebook, std::span<const Symbol> word,
                          DistanceMetric metric = DistanceMetric::kronecker);

// One trained base learner per codebook column plus nearest-codeword decoding.
// Decoding ties break to the smallest class index. Immutable once trained.
class EcocEnsemble {
public:
    // Trains on the given sample subset. Learner j draws its seed from
    // (seed, j), so column training order cannot affect results. Codebook rows
    // must be pairwise distinct and the class count must match.
    static EcocEnsemble train(const Dataset& data, std::span<const int> train_indices,
                              const CodingMatrix& codebook, const LearnerSpec& spec,
                              std::uint64_t seed,
                              DistanceMetric metric = DistanceMetric::kronecker,
                              TrainReport* report = nullptr);

    // Assembles custom column models; the test-suite hook for oracle learners.
    EcocEnsemble(CodingMatrix codebook, std::vector<std::unique_ptr<ColumnModel>> models,
                 DistanceMetric metric = DistanceMetric::kronecker);

    Prediction predict(std::span<const double> x) const;

    const CodingMatrix& codebook() const { return codebook_; }
    int columns() const { return codebook_.cols(); }

    // Decodes an already assembled codeword against the codebook.
    Prediction decode(std::span<const Symbol> word) const;

private:
    CodingMatrix codebook_;
    std::vector<std::unique_ptr<ColumnModel>> models_;
    DistanceMetric metric_;
};

struct CvResult {
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation across folds
    std::vector<double> per_fold;
};

// Stratified k-fold cross validation of one codebook: per fold, an ensemble is
// trained on the remaining folds (fold seed mixed from the root seed) and
// scored by top-1 decoding accuracy on the held-out fold.
CvResult evaluate_cv(const Dataset& data, const CodingMatrix& codebook,
                     const LearnerSpec& spec, int folds, std::uint64_t seed,
                     DistanceMetric metric = DistanceMetric::kronecker);

}  // namespace necoc

#endif
