#include "necoc/verification.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "necoc/errors.hpp"

namespace necoc {

namespace {

// base^(dim*dim) with an early budget bail-out.
std::uint64_t candidate_count(int base, int dim, std::uint64_t budget) {
    std::uint64_t count = 1;
    const int cells = dim * dim;
    for (int i = 0; i < cells; ++i) {
        if (count > budget / base)
            throw budget_error("enumeration of " + std::to_string(base) + "^" +
                               std::to_string(cells) + " matrices exceeds the budget of " +
                               std::to_string(budget) + " candidates");
        count *= base;
    }
    return count;
}

long total_distance(const std::vector<Symbol>& cells, int dim) {
    long dr = -1, dc = -1;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            long d = 0;
            const Symbol* a = cells.data() + static_cast<std::size_t>(i) * dim;
            const Symbol* b = cells.data() + static_cast<std::size_t>(j) * dim;
            for (int t = 0; t < dim; ++t) d += a[t] != b[t];
            if (dr < 0 || d < dr) dr = d;
            d = 0;
            for (int t = 0; t < dim; ++t)
                d += cells[static_cast<std::size_t>(t) * dim + i] !=
                     cells[static_cast<std::size_t>(t) * dim + j];
            if (dc < 0 || d < dc) dc = d;
        }
    return dr + dc;
}

}  // namespace

ExhaustiveResult exhaustive_max_dT(int base, int dim, std::uint64_t budget) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
    const std::uint64_t count = candidate_count(base, dim, budget);

    std::vector<Symbol> cells(static_cast<std::size_t>(dim) * dim, 0);
    long best = -1;
    std::vector<Symbol> witness = cells;
    for (std::uint64_t c = 0;; ++c) {
        const long dt = total_distance(cells, dim);
        if (dt > best) {
            best = dt;
            witness = cells;
        }
        if (c + 1 == count) break;
        for (std::size_t digit = 0;; ++digit) {  // odometer, cell (0,0) fastest
            if (++cells[digit] < base) break;
            cells[digit] = 0;
        }
    }

    ExhaustiveResult result{base, dim, best, CodingMatrix(base, dim, dim, std::move(witness)),
                            count};
    return result;
}

long binary_total_distance_bound(int dim) { return dim % 2 == 0 ? dim : dim + 1; }

namespace {

TheoremReport check_family_matrix(int base, int k) {
    const CodingMatrix m = build_mk_unchecked(base, k);
    const int n = m.rows();
    long expected = 1;
    for (int t = 1; t < k; ++t) expected *= base;  // N^(k-1)
    const long p = expected;                       // required multiplicity
    expected *= base - 1;                          // (N-1) N^(k-1)

    TheoremReport report;
    report.expected = expected;
    const auto note = [&report](const std::string& text) {
        if (report.violation.empty()) report.violation = text;
    };

    const DistanceReport dist = distance_report(m, DistanceMetric::kronecker);
    report.d_r = dist.d_r;
    report.d_c = dist.d_c;
    report.distances_ok = dist.d_r == expected && dist.d_c == expected;
    if (dist.d_r != expected)
        note("d_r = " + std::to_string(dist.d_r) + ", expected " + std::to_string(expected) +
             " (rows " + std::to_string(dist.argmin_rows.first) + "," +
             std::to_string(dist.argmin_rows.second) + ")");
    else if (dist.d_c != expected)
        note("d_c = " + std::to_string(dist.d_c) + ", expected " + std::to_string(expected));

    // Multiplicity of every distinct row pair, one counting pass per pair.
    report.multiplicity_ok = true;
    std::array<long, 256> counts;
    for (int i = 0; i < n && report.multiplicity_ok; ++i) {
        const auto ri = m.row(i);
        for (int j = i + 1; j < n; ++j) {
            const auto rj = m.row(j);
            counts.fill(0);
            for (int t = 0; t < n; ++t) ++counts[(ri[t] + base - rj[t]) % base];
            for (int r = 0; r < base; ++r)
                if (counts[r] != p) {
                    report.multiplicity_ok = false;
                    note("rows " + std::to_string(i) + "," + std::to_string(j) +
                         ": residue " + std::to_string(r) + " occurs " +
                         std::to_string(counts[r]) + " times, expected " +
                         std::to_string(p));
                    break;
                }
            if (!report.multiplicity_ok) break;
        }
    }

    const PropertyReport props = validate_ecoc_properties(m);
    report.p3_ok = props.p3;
    report.p4_ok = props.p4;
    if (!props.p3)
        note("P3 violated by columns " + std::to_string(props.p3_witness->first) + "," +
             std::to_string(props.p3_witness->second));
    if (!props.p4)
        note("P4 violated by column " + std::to_string(*props.p4_witness));

    report.pass = report.distances_ok && report.multiplicity_ok && report.p3_ok &&
                  report.p4_ok;
    return report;
}

}  // namespace

TheoremReport check_theorem12(BasePrime base, int k) {
    return check_family_matrix(base.value(), k);
}

TheoremReport check_theorem12_unchecked(int base, int k) {
    return check_family_matrix(base, k);
}

bool check_hamming_absolute_agreement(const CodingMatrix& m) {
    const DistanceReport kron = distance_report(m, DistanceMetric::kronecker);
    const DistanceReport abs = distance_report(m, DistanceMetric::absolute);
    return kron.d_r == abs.d_r && kron.d_c == abs.d_c && kron.d_t == abs.d_t;
}

}  // namespace necoc
