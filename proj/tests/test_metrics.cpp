#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "necoc/construct.hpp"
#include "necoc/metrics.hpp"
#include "necoc/rng.hpp"

using namespace necoc;

namespace {

std::vector<Symbol> word(std::initializer_list<int> values) {
    std::vector<Symbol> out;
    for (int v : values) out.push_back(static_cast<Symbol>(v));
    return out;
}

std::vector<Symbol> random_word(Rng& rng, int length, int base) {
    std::vector<Symbol> out(length);
    for (auto& v : out) v = static_cast<Symbol>(rng.below(base));
    return out;
}

}  // namespace

TEST_CASE("hamming basics") {
    const auto x = word({0, 1, 2});
    CHECK(hamming(x, x, DistanceMetric::kronecker, 3) == 0);
    CHECK(hamming(x, x, DistanceMetric::absolute, 3) == 0);
    CHECK(hamming(word({0, 0, 2}), word({0, 1, 1}), DistanceMetric::kronecker, 3) == 2);
    // |0-0| + |0-1| + |2-1|
    CHECK(hamming(word({0, 0, 2}), word({0, 1, 1}), DistanceMetric::absolute, 3) == 2);
}

TEST_CASE("hamming rejects bad input") {
    CHECK_THROWS_AS(hamming(word({0, 1}), word({0, 1, 2}), DistanceMetric::kronecker, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(hamming(word({0, 3}), word({0, 1}), DistanceMetric::kronecker, 3),
                    std::invalid_argument);
}

TEST_CASE("adjacent seed rows differ in N-1 positions") {
    const CodingMatrix m = build_m1(BasePrime(3));
    CHECK(hamming(m.row(0), m.row(1), DistanceMetric::kronecker, 3) == 2);
    CHECK(hamming(m.row(0), m.row(2), DistanceMetric::kronecker, 3) == 2);
    CHECK(hamming(m.row(1), m.row(2), DistanceMetric::kronecker, 3) == 2);
}

TEST_CASE("metric axioms hold on random codewords") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int base = 2 + static_cast<int>(rng.below(9));
        const int length = 1 + static_cast<int>(rng.below(12));
        const auto x = random_word(rng, length, base);
        const auto y = random_word(rng, length, base);
        const auto z = random_word(rng, length, base);
        for (auto metric : {DistanceMetric::kronecker, DistanceMetric::absolute}) {
            CHECK(hamming(x, y, metric, base) == hamming(y, x, metric, base));
            CHECK((hamming(x, y, metric, base) == 0) == (x == y));
        }
        CHECK(hamming(x, z, DistanceMetric::kronecker, base) <=
              hamming(x, y, DistanceMetric::kronecker, base) +
                  hamming(y, z, DistanceMetric::kronecker, base));
    }
}

TEST_CASE("kronecker and absolute agree on binary codewords") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int length = 1 + static_cast<int>(rng.below(20));
        const auto x = random_word(rng, length, 2);
        const auto y = random_word(rng, length, 2);
        CHECK(hamming(x, y, DistanceMetric::kronecker, 2) ==
              hamming(x, y, DistanceMetric::absolute, 2));
    }
}

TEST_CASE("distance report on the 4x4 walsh matrix") {
    const DistanceReport r = distance_report(build_walsh(2), DistanceMetric::kronecker);
    CHECK(r.d_r == 2);
    CHECK(r.d_c == 2);
    CHECK(r.d_t == 4);
    CHECK(r.argmin_rows == std::pair{0, 1});
    CHECK(r.argmin_cols == std::pair{0, 1});
    CHECK(report_line(r) == "2 2 4");
}

TEST_CASE("distance report on the base-3 seed") {
    const DistanceReport r = distance_report(build_m1(BasePrime(3)), DistanceMetric::kronecker);
    CHECK(r.d_r == 2);
    CHECK(r.d_c == 2);
    CHECK(r.d_t == 4);
}

TEST_CASE("distance report needs two rows and two columns") {
    CHECK_THROWS_AS(distance_report(CodingMatrix(2, {{0, 1}}), DistanceMetric::kronecker),
                    std::invalid_argument);
    CHECK_THROWS_AS(distance_report(CodingMatrix(2, {{0}, {1}}), DistanceMetric::kronecker),
                    std::invalid_argument);
}

TEST_CASE("argmin ties break to the lexicographically smallest pair") {
    // Every pair of distinct rows/cols of a family matrix is at the same
    // distance, so the reported pair must be (0, 1).
    const DistanceReport r =
        distance_report(build_mk(BasePrime(5), 2), DistanceMetric::kronecker);
    CHECK(r.argmin_rows == std::pair{0, 1});
    CHECK(r.argmin_cols == std::pair{0, 1});
    CHECK(r.d_t == r.d_r + r.d_c);
}

TEST_CASE("difference vector basics") {
    const auto x = word({2, 0, 1});
    CHECK(difference_vector(x, x, 3) == word({0, 0, 0}));
    const CodingMatrix m = build_m1(BasePrime(3));
    const auto d02 = difference_vector(m.row(0), m.row(2), 3);
    std::vector<Symbol> sorted(d02);
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == word({0, 1, 2}));  // a permutation of the residues
}

TEST_CASE("rows of two shifts differ by a constant vector") {
    const CodingMatrix m = build_m1(BasePrime(5));
    for (int s = 0; s < 5; ++s)
        for (int t = 0; t < 5; ++t) {
            const CodingMatrix ms = shift(m, s);
            const CodingMatrix mt = shift(m, t);
            for (int i = 0; i < 5; ++i) {
                const auto dv = difference_vector(ms.row(i), mt.row(i), 5);
                for (Symbol v : dv) CHECK(int(v) == ((s - t) % 5 + 5) % 5);
            }
        }
}

TEST_CASE("multiplicity of family matrices is N^(k-1)") {
    const CodingMatrix m32 = build_mk(BasePrime(3), 2);
    for (int i = 0; i < m32.rows(); ++i)
        for (int j = i + 1; j < m32.rows(); ++j)
            CHECK(multiplicity(m32.row(i), m32.row(j), 3) == 3);

    const CodingMatrix m52 = build_mk(BasePrime(5), 2);
    for (int i = 0; i < m52.rows(); ++i)
        for (int j = i + 1; j < m52.rows(); ++j) {
            const auto p = multiplicity(m52.row(i), m52.row(j), 5);
            REQUIRE(p.has_value());
            CHECK(*p == 5);
            // independent residue tally of the difference vector
            std::map<int, int> tally;
            for (int t = 0; t < 25; ++t)
                ++tally[((m52.at(i, t) - m52.at(j, t)) % 5 + 5) % 5];
            for (const auto& [residue, count] : tally) CHECK(count == 5);
        }
}

TEST_CASE("multiplicity edge cases") {
    const auto x = word({0, 1, 2});
    CHECK_FALSE(multiplicity(x, x, 3).has_value());  // all-zero difference vector
    CHECK_THROWS_AS(multiplicity(word({0, 1}), word({1, 0}), 3), std::invalid_argument);
}

TEST_CASE("multiplicity p forces kronecker distance (N-1)p") {
    for (int base : {3, 5, 7}) {
        const CodingMatrix m = build_mk(BasePrime(base), 2);
        for (int j = 1; j < m.rows(); j += 3) {
            const auto p = multiplicity(m.row(0), m.row(j), base);
            REQUIRE(p.has_value());
            CHECK(hamming(m.row(0), m.row(j), DistanceMetric::kronecker, base) ==
                  (base - 1) * *p);
        }
    }
}

TEST_CASE("complement detection") {
    CHECK(are_nary_complements(word({0, 1, 2}), word({1, 2, 0}), 3));   // cyclic +1
    CHECK_FALSE(are_nary_complements(word({0, 0, 1}), word({0, 1, 0}), 3));
    CHECK_FALSE(are_nary_complements(word({0, 1}), word({0, 1}), 3));   // identity only
    CHECK(are_nary_complements(word({0, 1, 0}), word({1, 0, 1}), 2));   // bitwise negation
    // partial use of the alphabet still extends to a permutation
    CHECK(are_nary_complements(word({0, 0, 1}), word({2, 2, 0}), 3));
    // non-injective positionwise map is not a permutation
    CHECK_FALSE(are_nary_complements(word({0, 1}), word({2, 2}), 3));
}

TEST_CASE("no two seed rows are complements") {
    const CodingMatrix m = build_m1(BasePrime(5));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK_FALSE(are_nary_complements(m.row(i), m.row(j), 5));
}

TEST_CASE("complement check is symmetric") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int base = 2 + static_cast<int>(rng.below(5));
        const int length = 1 + static_cast<int>(rng.below(8));
        const auto x = random_word(rng, length, base);
        const auto y = random_word(rng, length, base);
        CHECK(are_nary_complements(x, y, base) == are_nary_complements(y, x, base));
    }
}

TEST_CASE("property validation passes on a family matrix") {
    const PropertyReport r = validate_ecoc_properties(build_mk(BasePrime(3), 2));
    CHECK(r.p3);
    CHECK(r.p4);
    CHECK(r.ok());
}

TEST_CASE("constant column fails P4 with the first witness") {
    const CodingMatrix m(3, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});  // columns 1 and 2 constant
    const PropertyReport r = validate_ecoc_properties(m);
    CHECK_FALSE(r.p4);
    CHECK(r.p4_witness == 1);
}

TEST_CASE("negated binary column fails P3") {
    const CodingMatrix m(2, {{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}});
    const PropertyReport r = validate_ecoc_properties(m);
    CHECK_FALSE(r.p3);
    CHECK(r.p3_witness == std::pair{0, 1});
}
