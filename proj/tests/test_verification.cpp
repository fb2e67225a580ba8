#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "necoc/errors.hpp"
#include "necoc/verification.hpp"

using namespace necoc;

TEST_CASE("exhaustive search over 3x3 binary matrices") {
    const ExhaustiveResult r = exhaustive_max_dT(2, 3);
    CHECK(r.enumerated == 512);
    CHECK(r.max_d_t == 4);  // the odd bound n + 1 is attained
    CHECK(r.max_d_t == binary_total_distance_bound(3));
    CHECK(distance_report(r.witness, DistanceMetric::kronecker).d_t == r.max_d_t);
}

TEST_CASE("exhaustive search over 4x4 binary matrices") {
    const ExhaustiveResult r = exhaustive_max_dT(2, 4);
    CHECK(r.enumerated == 65536);
    CHECK(r.max_d_t == 4);  // the even bound n, attained by the Walsh matrix
    CHECK(r.max_d_t == binary_total_distance_bound(4));
    CHECK(distance_report(build_walsh(2), DistanceMetric::kronecker).d_t == r.max_d_t);
}

TEST_CASE("exhaustive search over 3x3 ternary matrices") {
    // The true ternary maximum at n = 3 exceeds the family value
    // d_T(M_1(3)) = 4: a Latin square already reaches d_r = d_c = 3.
    const ExhaustiveResult r = exhaustive_max_dT(3, 3);
    CHECK(r.enumerated == 19683);
    CHECK(r.max_d_t == 6);
    CHECK(r.max_d_t >= distance_report(build_m1(BasePrime(3)), DistanceMetric::kronecker).d_t);
}

TEST_CASE("witness is the earliest maximizer in odometer order") {
    const ExhaustiveResult a = exhaustive_max_dT(2, 3);
    const ExhaustiveResult b = exhaustive_max_dT(2, 3);
    CHECK(a.witness == b.witness);
    CHECK(distance_report(a.witness, DistanceMetric::kronecker).d_t == 4);
}

TEST_CASE("enumeration budget is enforced, never silently sampled") {
    CHECK_THROWS_AS(exhaustive_max_dT(2, 6), budget_error);   // 2^36
    CHECK_THROWS_AS(exhaustive_max_dT(3, 4, 1000), budget_error);
    CHECK_NOTHROW(exhaustive_max_dT(2, 2));
}

TEST_CASE("theorem check passes for odd prime bases") {
    for (auto [base, k] : {std::pair{3, 2}, {3, 3}, {5, 2}, {11, 1}}) {
        const TheoremReport r = check_theorem12(BasePrime(base), k);
        CHECK(r.pass);
        CHECK(r.violation.empty());
        long long expected = base - 1;
        for (int t = 1; t < k; ++t) expected *= base;
        CHECK(r.d_r == expected);
        CHECK(r.d_c == expected);
    }
}

TEST_CASE("binary family matrices satisfy everything except P4") {
    // Column 0 of any Walsh matrix is constant zero, so P4 cannot hold at
    // base 2; distances, multiplicity and P3 still do.
    for (int k : {2, 5}) {
        const TheoremReport r = check_theorem12(BasePrime(2), k);
        CHECK_FALSE(r.pass);
        CHECK(r.distances_ok);
        CHECK(r.multiplicity_ok);
        CHECK(r.p3_ok);
        CHECK_FALSE(r.p4_ok);
        CHECK(r.d_r == (1 << (k - 1)));
    }
}

TEST_CASE("theorem check at base 7 reports d_r 42") {
    const TheoremReport r = check_theorem12(BasePrime(7), 2);
    CHECK(r.pass);
    CHECK(r.d_r == 42);  // (6/7) * 49
}

TEST_CASE("composite base 4 fails the theorem with total distance 16") {
    const TheoremReport r = check_theorem12_unchecked(4, 2);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.violation.empty());
    CHECK(r.expected == 12);           // the formula value (N-1)N^(k-1) = 3*4
    CHECK(r.d_r + r.d_c == 16);        // observed total, not the formula's 24
}

TEST_CASE("metric agreement holds for binary matrices") {
    CHECK(check_hamming_absolute_agreement(build_walsh(3)));
    CHECK(check_hamming_absolute_agreement(build_punctured_walsh(3)));
}

TEST_CASE("metric agreement on small seeds") {
    // Both reports of M_1(3) happen to be (2,2,4); base 11 separates them.
    CHECK(check_hamming_absolute_agreement(build_m1(BasePrime(3))));
    const CodingMatrix vowel = build_m1(BasePrime(11));
    CHECK_FALSE(check_hamming_absolute_agreement(vowel));
    const DistanceReport abs = distance_report(vowel, DistanceMetric::absolute);
    CHECK(abs.d_r == 31);
    CHECK(abs.d_t == 62);
}

TEST_CASE("conjecture bound values") {
    CHECK(binary_total_distance_bound(3) == 4);
    CHECK(binary_total_distance_bound(4) == 4);
    CHECK(binary_total_distance_bound(7) == 8);
    CHECK(binary_total_distance_bound(8) == 8);
}

TEST_CASE("construction never beats the oracle on enumerable dimensions") {
    const ExhaustiveResult r = exhaustive_max_dT(2, 4);
    CHECK(r.max_d_t >= distance_report(build_mk(BasePrime(2), 2),
                                       DistanceMetric::kronecker).d_t);
}
