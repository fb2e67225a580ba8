#include "necoc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "necoc/rng.hpp"

namespace necoc {

std::vector<int> relabel(std::span<const int> labels, std::span<const Symbol> column) {
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int t = labels[i];
        if (t < 0 || t >= static_cast<int>(column.size()))
            throw std::invalid_argument("label " + std::to_string(t) +
                                        " out of range for a column of length " +
                                        std::to_string(column.size()));
        out[i] = column[t];
    }
    return out;
}

namespace {

void check_codebook(const CodingMatrix& codebook) {
    for (int i = 0; i < codebook.rows(); ++i) {
        const auto ri = codebook.row(i);
        for (int j = i + 1; j < codebook.rows(); ++j)
            if (std::ranges::equal(ri, codebook.row(j)))
                throw std::invalid_argument("codebook rows " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are identical");
    }
}

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x9e3779b97f4a7c15ULL + index);
    return splitmix64(s);
}

}  // namespace

EcocEnsemble::EcocEnsemble(CodingMatrix codebook,
                           std::vector<std::unique_ptr<ColumnModel>> models,
                           DistanceMetric metric)
    : codebook_(std::move(codebook)), models_(std::move(models)), metric_(metric) {
    if (static_cast<int>(models_.size()) != codebook_.cols())
        throw std::invalid_argument("need exactly one model per codebook column");
    check_codebook(codebook_);
}

EcocEnsemble EcocEnsemble::train(const Dataset& data, std::span<const int> train_indices,
                                 const CodingMatrix& codebook, const LearnerSpec& spec,
                                 std::uint64_t seed, DistanceMetric metric,
                                 TrainReport* report) {
    if (data.classes != codebook.rows())
        throw std::invalid_argument("dataset has " + std::to_string(data.classes) +
                                    " classes but the codebook has " +
                                    std::to_string(codebook.rows()) + " rows");
    check_codebook(codebook);

    std::vector<int> labels(train_indices.size());
    for (std::size_t i = 0; i < train_indices.size(); ++i)
        labels[i] = data.labels[train_indices[i]];

    std::vector<std::unique_ptr<ColumnModel>> models;
    models.reserve(codebook.cols());
    for (int j = 0; j < codebook.cols(); ++j) {
        const std::vector<Symbol> column = codebook.column(j);
        const std::vector<int> targets = relabel(labels, column);
        const bool constant =
            std::all_of(targets.begin(), targets.end(),
                        [&](int t) { return t == targets.front(); });
        if (constant) {
            // A P4 violation in the codebook (or a degenerate split) trains a
            // constant predictor rather than failing.
            if (report) report->constant_columns.push_back(j);
            models.push_back(std::make_unique<ConstantModel>(targets.front()));
            continue;
        }
        models.push_back(train_column(spec, data, train_indices, targets, codebook.base(),
                                      mix_seed(seed, static_cast<std::uint64_t>(j))));
    }
    return EcocEnsemble(codebook, std::move(models), metric);
}

Prediction decode_nearest(const CodingMatrix& codebook, std::span<const Symbol> word,
                          DistanceMetric metric) {
    if (static_cast<int>(word.size()) != codebook.cols())
        throw std::invalid_argument("codeword length does not match the codebook");
    long best = std::numeric_limits<long>::max();
    long second = std::numeric_limits<long>::max();
    int label = 0;
    for (int i = 0; i < codebook.rows(); ++i) {
        const auto row = codebook.row(i);
        long d = 0;
        if (metric == DistanceMetric::kronecker) {
            for (std::size_t t = 0; t < word.size(); ++t) d += row[t] != word[t];
        } else {
            for (std::size_t t = 0; t < word.size(); ++t)
                d += row[t] > word[t] ? row[t] - word[t] : word[t] - row[t];
        }
        if (d < best) {
            second = best;
            best = d;
            label = i;
        } else if (d < second) {
            second = d;
        }
    }
    Prediction p;
    p.label = label;
    p.codeword.assign(word.begin(), word.end());
    p.margin = second == std::numeric_limits<long>::max() ? 0 : second - best;
    return p;
}

Prediction EcocEnsemble::decode(std::span<const Symbol> word) const {
    return decode_nearest(codebook_, word, metric_);
}

Prediction EcocEnsemble::predict(std::span<const double> x) const {
    std::vector<Symbol> word(models_.size());
    for (std::size_t j = 0; j < models_.size(); ++j)
        word[j] = static_cast<Symbol>(models_[j]->predict(x));
    return decode(word);
}

CvResult evaluate_cv(const Dataset& data, const CodingMatrix& codebook,
                     const LearnerSpec& spec, int folds, std::uint64_t seed,
                     DistanceMetric metric) {
    const FoldAssignment fa = stratified_folds(data, folds, seed);
    CvResult result;
    result.per_fold.reserve(folds);
    for (int f = 0; f < folds; ++f) {
        std::vector<int> train_idx, test_idx;
        for (int i = 0; i < data.samples; ++i)
            (fa.fold_of[i] == f ? test_idx : train_idx).push_back(i);
        const EcocEnsemble ensemble = EcocEnsemble::train(
            data, train_idx, codebook, spec, mix_seed(seed, 1000 + f), metric);
        long correct = 0;
        for (int i : test_idx)
            if (ensemble.predict(data.sample(i)).label == data.labels[i]) ++correct;
        result.per_fold.push_back(static_cast<double>(correct) / test_idx.size());
    }
    double sum = 0.0;
    for (double a : result.per_fold) sum += a;
    result.mean = sum / folds;
    double var = 0.0;
    for (double a : result.per_fold) var += (a - result.mean) * (a - result.mean);
    result.stddev = std::sqrt(var / folds);
    return result;
}

}  // namespace necoc
