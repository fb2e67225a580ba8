#include "necoc/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace necoc {

namespace {

// Unchecked kernels; callers guarantee equal lengths and valid symbols.
long kronecker_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
    long d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

long absolute_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
    long d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
    return d;
}

long distance(std::span<const Symbol> x, std::span<const Symbol> y, DistanceMetric metric) {
    return metric == DistanceMetric::kronecker ? kronecker_distance(x, y)
                                               : absolute_distance(x, y);
}

void check_pair(std::span<const Symbol> x, std::span<const Symbol> y, int base) {
    if (x.size() != y.size()) throw std::invalid_argument("codeword length mismatch");
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    for (Symbol v : x)
        if (v >= base) throw std::invalid_argument("symbol out of range for base");
    for (Symbol v : y)
        if (v >= base) throw std::invalid_argument("symbol out of range for base");
}

// Minimum pairwise distance over the rows of a row-major grid.
void min_pair_distance(const CodingMatrix& m, DistanceMetric metric, long& best,
                       std::pair<int, int>& argmin) {
    best = -1;
    for (int i = 0; i < m.rows(); ++i) {
        const auto ri = m.row(i);
        for (int j = i + 1; j < m.rows(); ++j) {
            const long d = distance(ri, m.row(j), metric);
            if (best < 0 || d < best) {
                best = d;
                argmin = {i, j};
            }
        }
    }
}

}  // namespace

long hamming(std::span<const Symbol> x, std::span<const Symbol> y,
             DistanceMetric metric, int base) {
    check_pair(x, y, base);
    return distance(x, y, metric);
}

DistanceReport distance_report(const CodingMatrix& m, DistanceMetric metric) {
    if (m.rows() < 2 || m.cols() < 2)
        throw std::invalid_argument("distance report needs at least 2 rows and 2 columns");
    DistanceReport r;
    r.metric = metric;
    min_pair_distance(m, metric, r.d_r, r.argmin_rows);
    min_pair_distance(m.transposed(), metric, r.d_c, r.argmin_cols);
    r.d_t = r.d_r + r.d_c;
    return r;
}

std::string report_line(const DistanceReport& r) {
    return std::to_string(r.d_r) + " " + std::to_string(r.d_c) + " " + std::to_string(r.d_t);
}

DifferenceVector difference_vector(std::span<const Symbol> x, std::span<const Symbol> y,
                                   int base) {
    check_pair(x, y, base);
    DifferenceVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = static_cast<Symbol>((x[i] + base - y[i]) % base);
    return out;
}

std::optional<int> multiplicity(std::span<const Symbol> x, std::span<const Symbol> y,
                                int base) {
    check_pair(x, y, base);
    if (x.empty() || x.size() % base != 0)
        throw std::invalid_argument("multiplicity needs base | length");
    const int p = static_cast<int>(x.size()) / base;
    std::vector<long> counts(base, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        ++counts[(x[i] + base - y[i]) % base];
    for (long c : counts)
        if (c != p) return std::nullopt;
    return p;
}

bool are_nary_complements(std::span<const Symbol> x, std::span<const Symbol> y, int base) {
    check_pair(x, y, base);
    constexpr int kUnset = -1;
    std::array<int, 256> map;     // symbol of x -> symbol of y
    std::array<bool, 256> image;  // symbols already used as targets
    std::fill_n(map.begin(), base, kUnset);
    std::fill_n(image.begin(), base, false);
    bool moves_one = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int a = x[i], b = y[i];
        if (map[a] == kUnset) {
            if (image[b]) return false;  // two symbols would share a target
            map[a] = b;
            image[b] = true;
        } else if (map[a] != b) {
            return false;  // inconsistent positionwise mapping
        }
        if (a != b) moves_one = true;
    }
    return moves_one;
}

PropertyReport validate_ecoc_properties(const CodingMatrix& m) {
    PropertyReport report;
    const int n = m.cols();
    std::vector<std::vector<Symbol>> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = m.column(j);

    for (int j = 0; j < n && report.p4; ++j) {
        bool constant = true;
        for (int i = 1; i < m.rows(); ++i)
            if (cols[j][i] != cols[j][0]) {
                constant = false;
                break;
            }
        if (constant) {
            report.p4 = false;
            report.p4_witness = j;
        }
    }

    for (int a = 0; a < n && report.p3; ++a)
        for (int b = a + 1; b < n; ++b)
            if (are_nary_complements(cols[a], cols[b], m.base())) {
                report.p3 = false;
                report.p3_witness = {a, b};
                break;
            }
    return report;
}

}  // namespace necoc
