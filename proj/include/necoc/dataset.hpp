#ifndef NECOC_DATASET_HPP
#define NECOC_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace necoc {

// Dense numeric samples with labels remapped to [0, classes). Immutable after
// load; every class index occurs at least once and all features are finite.
struct Dataset {
    std::string name;
    int samples = 0;
    int dims = 0;
    int classes = 0;
    std::vector<double> features;        // samples x dims, row-major
    std::vector<int> labels;             // one per sample, in [0, classes)
    std::vector<long long> label_names;  // original label value per class index

    std::span<const double> sample(int i) const {
        return {features.data() + static_cast<std::size_t>(i) * dims,
                static_cast<std::size_t>(dims)};
    }
};

// Comma-separated numeric rows of equal arity. label_column = -1 means the
// last column. Labels must be integral-valued; they are remapped to a dense
// [0, classes) range in sorted original order, and the mapping is retained in
// label_names. Parse failures name the offending line.
Dataset load_csv(const std::filesystem::path& path, int label_column = -1,
                 bool has_header = false, const std::string& name = "");

// Writes features at full round-trip precision with the (remapped) label as
// the last column. load_csv(save_csv(d)) reproduces d exactly.
void save_csv(const Dataset& d, const std::filesystem::path& path);

// Sparse "label index:value ..." lines, indices 1-based; absent features are
// zero. The feature count is the largest index seen.
Dataset load_sparse(const std::filesystem::path& path, const std::string& name = "");

// Gaussian clusters (unit standard deviation) at seeded random centers whose
// pairwise distances are at least `separation`. Deterministic per seed.
Dataset make_blobs(int classes, int samples_per_class, int dims, double separation,
                   std::uint64_t seed);

struct FoldAssignment {
    std::vector<int> fold_of;  // fold index per sample
    int folds = 0;
};

// Within each class, samples are shuffled by seed and dealt round-robin, so
// per-class fold sizes differ by at most one. Every class needs >= folds
// samples.
FoldAssignment stratified_folds(const Dataset& d, int folds, std::uint64_t seed);

}  // namespace necoc

#endif
