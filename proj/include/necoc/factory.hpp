#ifndef NECOC_FACTORY_HPP
#define NECOC_FACTORY_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "necoc/construct.hpp"
#include "necoc/matrix.hpp"
#include "necoc/metrics.hpp"

namespace necoc {

// Codeword-length policy relative to the class count c.
struct DimensionPolicy {
    enum class Kind { half, square, double_width, explicit_width };
    Kind kind = Kind::square;
    int width = 0;  // used by explicit_width only

    static DimensionPolicy half() { return {Kind::half, 0}; }
    static DimensionPolicy square() { return {Kind::square, 0}; }
    static DimensionPolicy double_width() { return {Kind::double_width, 0}; }
    static DimensionPolicy explicit_width(int n) { return {Kind::explicit_width, n}; }

    int resolve(int classes) const;
    std::string name() const;
};

// Documented helper only: the codeword-length heuristic n = ceil(10 * log2 c)
// mentioned alongside the half/square/double policies. Never used by them.
int heuristic_width(int classes);

struct SearchConfig {
    int trials = 1000;
    enum class Objective { total, row } objective = Objective::total;
    DistanceMetric metric = DistanceMetric::kronecker;
    std::uint64_t seed = 0;
};

struct Provenance {
    enum class Strategy { deterministic, random } strategy = Strategy::deterministic;
    int base = 0;
    // deterministic
    int k = 0;
    int repairs = 0;
    // random
    std::uint64_t seed = 0;
    int winning_trial = 0;
};

struct FactoryResult {
    CodingMatrix matrix;
    DistanceReport report;
    Provenance provenance;
};

// Smallest k with base^k >= classes; the post-state N^(k-1) < c <= N^k.
int choose_k(BasePrime base, int classes);

// The rows x cols submatrix left after deleting leading rows and leading
// columns (the bottom-right block). Deterministic.
CodingMatrix truncate(const CodingMatrix& m, int rows, int cols);

// Scans row pairs in lexicographic index order; at the first duplicate pair
// the higher-indexed row gets entry 0 bumped by +1 mod N, then the scan
// restarts. Returns the repaired matrix and the number of bumps applied.
std::pair<CodingMatrix, int> repair_duplicate_rows(const CodingMatrix& m);

// choose_k -> build_mk -> truncate -> repair_duplicate_rows. k is raised when
// the resolved width exceeds base^k. Requires the resolved dimensions to be
// at least 2 so the distance report is defined.
FactoryResult deterministic_matrix(BasePrime base, int classes, DimensionPolicy policy);

// Best of `trials` i.i.d.-uniform matrices under the configured objective,
// ties to the earliest trial. Each trial draws from substream (seed, trial),
// so results are independent of evaluation order. Composite bases permitted.
FactoryResult random_matrix(int base, int classes, DimensionPolicy policy,
                            const SearchConfig& config);

// key=value lines for the .meta sidecar that travels with a matrix file.
std::string provenance_text(const Provenance& p);

}  // namespace necoc

#endif
