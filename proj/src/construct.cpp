#include "necoc/construct.hpp"

#include <cstdint>
#include <stdexcept>

#include "necoc/errors.hpp"

namespace necoc {

bool is_prime(int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

BasePrime::BasePrime(int value) : value_(value) {
    if (!is_prime(value)) throw composite_base_error(value);
}

namespace {

// Entry (i,j) of the seed matrix. The diagonal-offset sum is evaluated in
// exact integer arithmetic and reduced mod N once.
Symbol seed_entry(int base, int i, int j) {
    const long long lo = i < j ? i : j;
    const long long d = i < j ? j - i : i - j;
    const long long s = lo + d * (base + 1) - d * (d + 1) / 2;
    return static_cast<Symbol>(s % base);
}

void check_capacity(long long dim) {
    if (dim > kMaxDimension) throw capacity_error(dim, kMaxDimension);
}

CodingMatrix m1_impl(int base) {
    check_capacity(base);
    CodingMatrix m(base, base, base);
    for (int i = 0; i < base; ++i)
        for (int j = 0; j < base; ++j)
            m.set(i, j, seed_entry(base, i, j));
    return m;
}

CodingMatrix mk_impl(int base, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long dim = 1;
    for (int t = 0; t < k; ++t) {
        dim *= base;
        check_capacity(dim);
    }
    CodingMatrix seed = m1_impl(base);
    CodingMatrix m = seed;
    for (int level = 1; level < k; ++level) {
        const int n = m.rows();
        CodingMatrix next(base, n * base, n * base);
        for (int bi = 0; bi < base; ++bi)
            for (int bj = 0; bj < base; ++bj) {
                const int s = seed.at(bi, bj);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        next.set(bi * n + i, bj * n + j,
                                 static_cast<Symbol>((m.at(i, j) + s) % base));
            }
        m = std::move(next);
    }
    return m;
}

}  // namespace

CodingMatrix build_m1(BasePrime base) { return m1_impl(base.value()); }

CodingMatrix build_m1_unchecked(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    return m1_impl(base);
}

CodingMatrix shift(const CodingMatrix& m, int s) {
    if (s < 0) throw std::invalid_argument("shift must be non-negative");
    const int base = m.base();
    const int add = s % base;
    CodingMatrix out(base, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.set(i, j, static_cast<Symbol>((m.at(i, j) + add) % base));
    return out;
}

CodingMatrix build_mk(BasePrime base, int k) { return mk_impl(base.value(), k); }

CodingMatrix build_mk_unchecked(int base, int k) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    return mk_impl(base, k);
}

CodingMatrix build_walsh(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long dim = 1;
    for (int t = 0; t < k; ++t) {
        dim *= 2;
        check_capacity(dim);
    }
    CodingMatrix h(2, {{0, 0}, {0, 1}});
    for (int level = 1; level < k; ++level) {
        const int n = h.rows();
        CodingMatrix next(2, 2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Symbol v = h.at(i, j);
                next.set(i, j, v);
                next.set(i, j + n, v);
                next.set(i + n, j, v);
                next.set(i + n, j + n, static_cast<Symbol>(1 - v));
            }
        h = std::move(next);
    }
    return h;
}

CodingMatrix build_punctured_walsh(int k) {
    if (k < 2) throw std::invalid_argument("punctured Walsh needs k >= 2");
    CodingMatrix h = build_walsh(k);
    const int n = h.rows() - 1;
    CodingMatrix p(2, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p.set(i, j, h.at(i + 1, j + 1));
    return p;
}

}  // namespace necoc
