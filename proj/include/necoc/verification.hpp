#ifndef NECOC_VERIFICATION_HPP
#define NECOC_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "necoc/construct.hpp"
#include "necoc/matrix.hpp"
#include "necoc/metrics.hpp"

namespace necoc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 26;

struct ExhaustiveResult {
    int base = 0;
    int dim = 0;
    long max_d_t = 0;
    CodingMatrix witness;             // earliest maximizer in enumeration order
    std::uint64_t enumerated = 0;     // equals base^(dim*dim)
};

// Exact maximum of d_T over all base-ary dim x dim matrices, found by full
// enumeration (no pruning). Candidates are visited in odometer order with
// entry (0,0) as the fastest digit; the witness is the first maximizer.
// Throws budget_error when base^(dim^2) exceeds the budget.
ExhaustiveResult exhaustive_max_dT(int base, int dim,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// The conjectured ceiling on d_T for square binary matrices: n when n is
// even, n + 1 when n is odd (stated for n >= 3).
long binary_total_distance_bound(int dim);

struct TheoremReport {
    bool pass = false;      // all four component checks
    std::string violation;  // first violation, empty when pass
    long d_r = 0;
    long d_c = 0;
    long expected = 0;      // (N-1) * N^(k-1)
    bool distances_ok = false;
    bool multiplicity_ok = false;
    bool p3_ok = false;
    bool p4_ok = false;     // known to fail at N = 2: column 0 is constant
};

// Checks d_r = d_c = (N-1)N^(k-1), multiplicity N^(k-1) for every distinct
// row pair, and properties P3/P4 on the k-th matrix of the family.
TheoremReport check_theorem12(BasePrime base, int k);

// Same checks on the unchecked construction; composite bases are expected to
// fail, which is the point of calling this.
TheoremReport check_theorem12_unchecked(int base, int k);

// True iff the Kronecker and absolute distance reports carry the same
// (d_r, d_c, d_T). Always true for binary matrices.
bool check_hamming_absolute_agreement(const CodingMatrix& m);

}  // namespace necoc

#endif
