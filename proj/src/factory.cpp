#include "necoc/factory.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "necoc/errors.hpp"
#include "necoc/rng.hpp"

namespace necoc {

int DimensionPolicy::resolve(int classes) const {
    if (classes < 2) throw std::invalid_argument("need at least 2 classes");
    int n = 0;
    switch (kind) {
        case Kind::half: n = classes / 2; break;
        case Kind::square: n = classes; break;
        case Kind::double_width: n = 2 * classes; break;
        case Kind::explicit_width: n = width; break;
    }
    if (n < 1) throw std::invalid_argument("resolved codeword length must be >= 1");
    return n;
}

std::string DimensionPolicy::name() const {
    switch (kind) {
        case Kind::half: return "half";
        case Kind::square: return "square";
        case Kind::double_width: return "double";
        case Kind::explicit_width: return std::to_string(width);
    }
    return "?";
}

int heuristic_width(int classes) {
    if (classes < 2) throw std::invalid_argument("need at least 2 classes");
    return static_cast<int>(std::ceil(10.0 * std::log2(static_cast<double>(classes))));
}

int choose_k(BasePrime base, int classes) {
    if (classes < 2) throw std::invalid_argument("need at least 2 classes");
    const int n = base.value();
    int k = 1;
    long long dim = n;
    while (dim < classes) {
        dim *= n;
        ++k;
        if (dim > kMaxDimension) throw capacity_error(dim, kMaxDimension);
    }
    return k;
}

CodingMatrix truncate(const CodingMatrix& m, int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("truncation dimensions must be >= 1");
    if (rows > m.rows() || cols > m.cols())
        throw std::invalid_argument("truncation dimensions exceed the source matrix");
    const int ro = m.rows() - rows;
    const int co = m.cols() - cols;
    CodingMatrix out(m.base(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.set(i, j, m.at(ro + i, co + j));
    return out;
}

std::pair<CodingMatrix, int> repair_duplicate_rows(const CodingMatrix& m) {
    // c distinct rows need base^cols >= c (pigeonhole).
    long long capacity = 1;
    bool enough = false;
    for (int j = 0; j < m.cols() && !enough; ++j) {
        capacity *= m.base();
        if (capacity >= m.rows()) enough = true;
    }
    if (!enough)
        throw std::invalid_argument("cannot make " + std::to_string(m.rows()) +
                                    " rows distinct over " + std::to_string(m.cols()) +
                                    " base-" + std::to_string(m.base()) + " symbols");
    CodingMatrix out = m;
    int repairs = 0;
    // The first-entry walk can revisit a state when every +1 variant of a
    // duplicated row is already taken; detect that instead of spinning.
    std::set<std::vector<Symbol>> seen;
    for (;;) {
        bool repaired = false;
        for (int i = 0; i < out.rows() && !repaired; ++i) {
            const auto ri = out.row(i);
            for (int j = i + 1; j < out.rows(); ++j) {
                if (std::ranges::equal(ri, out.row(j))) {
                    out.set(j, 0, static_cast<Symbol>((out.at(j, 0) + 1) % out.base()));
                    ++repairs;
                    repaired = true;
                    break;
                }
            }
        }
        if (!repaired) return {std::move(out), repairs};
        std::vector<Symbol> state(out.entries().begin(), out.entries().end());
        if (!seen.insert(std::move(state)).second)
            throw std::runtime_error("duplicate-row repair cycled without resolving; "
                                     "rows cannot be separated by first-entry flips");
    }
}

FactoryResult deterministic_matrix(BasePrime base, int classes, DimensionPolicy policy) {
    const int n = policy.resolve(classes);
    if (classes < 2 || n < 2)
        throw std::invalid_argument("deterministic matrix needs dimensions >= 2");
    int k = choose_k(base, std::max(classes, n));
    auto [matrix, repairs] = repair_duplicate_rows(truncate(build_mk(base, k), classes, n));
    Provenance prov;
    prov.strategy = Provenance::Strategy::deterministic;
    prov.base = base.value();
    prov.k = k;
    prov.repairs = repairs;
    return {matrix, distance_report(matrix, DistanceMetric::kronecker), prov};
}

namespace {

long objective_value(const DistanceReport& r, SearchConfig::Objective objective) {
    return objective == SearchConfig::Objective::total ? r.d_t : r.d_r;
}

}  // namespace

FactoryResult random_matrix(int base, int classes, DimensionPolicy policy,
                            const SearchConfig& config) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int n = policy.resolve(classes);
    if (classes < 2 || n < 2)
        throw std::invalid_argument("random matrix needs dimensions >= 2");

    std::optional<FactoryResult> best;
    long best_value = -1;
    for (int trial = 0; trial < config.trials; ++trial) {
        Rng rng = Rng::substream(config.seed, static_cast<std::uint64_t>(trial));
        CodingMatrix candidate(base, classes, n);
        for (int i = 0; i < classes; ++i)
            for (int j = 0; j < n; ++j)
                candidate.set(i, j, static_cast<Symbol>(rng.below(base)));
        DistanceReport report = distance_report(candidate, config.metric);
        const long value = objective_value(report, config.objective);
        if (!best || value > best_value) {
            best_value = value;
            Provenance prov;
            prov.strategy = Provenance::Strategy::random;
            prov.base = base;
            prov.seed = config.seed;
            prov.winning_trial = trial;
            best = FactoryResult{std::move(candidate), report, prov};
        }
    }
    return *std::move(best);
}

std::string provenance_text(const Provenance& p) {
    std::string out;
    if (p.strategy == Provenance::Strategy::deterministic) {
        out += "strategy=deterministic\n";
        out += "base=" + std::to_string(p.base) + "\n";
        out += "k=" + std::to_string(p.k) + "\n";
        out += "repairs=" + std::to_string(p.repairs) + "\n";
    } else {
        out += "strategy=random\n";
        out += "base=" + std::to_string(p.base) + "\n";
        out += "seed=" + std::to_string(p.seed) + "\n";
        out += "trial=" + std::to_string(p.winning_trial) + "\n";
    }
    return out;
}

}  // namespace necoc
