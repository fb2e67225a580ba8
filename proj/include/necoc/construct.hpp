#ifndef NECOC_CONSTRUCT_HPP
#define NECOC_CONSTRUCT_HPP

#include "necoc/matrix.hpp"

namespace necoc {

// Recursive construction stops before any dimension exceeds this.
inline constexpr int kMaxDimension = 4096;

bool is_prime(int n);

// A validated prime base. N = 2 is admitted for the binary/Walsh path.
class BasePrime {
public:
    explicit BasePrime(int value);  // throws composite_base_error
    int value() const { return value_; }

private:
    int value_;
};

// The N x N seed matrix: residues {0..N-1} enumerated along the diagonals,
// repeating from the main diagonal. Symmetric by construction.
CodingMatrix build_m1(BasePrime base);

// Elementwise (entry + s) mod N; the N-ary analogue of binary complementation.
CodingMatrix shift(const CodingMatrix& m, int s);

// The N^k x N^k member of the recursive family: block (i,j) is the
// s_ij-shift of M_{k-1} with s_ij read from the seed matrix.
CodingMatrix build_mk(BasePrime base, int k);

// Same construction with no primality check. The distance guarantees do not
// hold for composite N; this path exists so that failure is demonstrable.
CodingMatrix build_m1_unchecked(int base);
CodingMatrix build_mk_unchecked(int base, int k);

// Sylvester doubling: 2^k x 2^k binary matrix, pairwise row and column
// distances all 2^(k-1). Built by the doubling recursion directly, so it can
// cross-check build_mk(2, k) as an independent route.
CodingMatrix build_walsh(int k);

// build_walsh(k) minus its first row and column: (2^k - 1)-dimensional square
// with the same pairwise distance 2^(k-1).
CodingMatrix build_punctured_walsh(int k);

}  // namespace necoc

#endif
