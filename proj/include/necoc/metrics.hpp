#ifndef NECOC_METRICS_HPP
#define NECOC_METRICS_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "necoc/matrix.hpp"

namespace necoc {

enum class DistanceMetric {
    kronecker,  // count of positions where the codewords differ
    absolute,   // sum of |x_i - y_i| over the integers, no modular reduction
};

// Codeword distance. Validates lengths and that every symbol is < base.
long hamming(std::span<const Symbol> x, std::span<const Symbol> y,
             DistanceMetric metric, int base);

struct DistanceReport {
    long d_r = 0;
    long d_c = 0;
    long d_t = 0;  // always d_r + d_c
    std::pair<int, int> argmin_rows{0, 0};
    std::pair<int, int> argmin_cols{0, 0};
    DistanceMetric metric = DistanceMetric::kronecker;
};

// Exact minima over all unordered distinct row pairs and column pairs.
// Exhaustive scan, no early exit; argmin ties break to the lexicographically
// smallest (i, j) with i < j. Requires at least 2 rows and 2 columns.
DistanceReport distance_report(const CodingMatrix& m, DistanceMetric metric);

// Serializes as the single line "d_r d_c d_T".
std::string report_line(const DistanceReport& r);

using DifferenceVector = std::vector<Symbol>;

// delta_i = (x_i - y_i) mod base. The Kronecker distance equals the count of
// nonzero deltas.
DifferenceVector difference_vector(std::span<const Symbol> x, std::span<const Symbol> y,
                                   int base);

// If every residue occurs exactly p = n/base times in the difference vector,
// returns p; otherwise empty. Requires base | n.
std::optional<int> multiplicity(std::span<const Symbol> x, std::span<const Symbol> y,
                                int base);

// True iff some alphabet permutation f maps x onto y positionwise and moves at
// least one symbol that occurs in x. The position-consistent partial map has
// to be injective; any injective partial map on the alphabet extends to a full
// permutation, so only consistency, injectivity and nontriviality are tested.
bool are_nary_complements(std::span<const Symbol> x, std::span<const Symbol> y, int base);

// P3: no two columns are N-ary complements. P4: no constant column.
struct PropertyReport {
    bool p3 = true;
    std::optional<std::pair<int, int>> p3_witness;  // first offending column pair
    bool p4 = true;
    std::optional<int> p4_witness;  // first constant column
    bool ok() const { return p3 && p4; }
};

PropertyReport validate_ecoc_properties(const CodingMatrix& m);

}  // namespace necoc

#endif
