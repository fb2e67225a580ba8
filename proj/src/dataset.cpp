#include "necoc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "necoc/errors.hpp"
#include "necoc/rng.hpp"

namespace necoc {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open dataset file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool parse_double(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    if (begin == end) return false;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

// Dense remap preserving sorted original label order; fills labels/label_names
// and the class count.
void remap_labels(const std::vector<long long>& raw, Dataset& d, const std::string& source) {
    std::map<long long, int> index_of;
    for (long long v : raw) index_of.emplace(v, 0);
    int next = 0;
    for (auto& [value, idx] : index_of) idx = next++;
    d.classes = next;
    if (d.classes < 1) throw parse_error(source + ": no samples");
    d.labels.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) d.labels[i] = index_of[raw[i]];
    d.label_names.resize(d.classes);
    for (const auto& [value, idx] : index_of) d.label_names[idx] = value;
}

void check_finite(double v, const std::string& source, long line) {
    if (!std::isfinite(v)) throw parse_error(source, line, "non-finite feature value");
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, int label_column, bool has_header,
                 const std::string& name) {
    const std::string source = path.string();
    const std::vector<std::string> lines = read_lines(path);

    Dataset d;
    d.name = name.empty() ? path.stem().string() : name;
    std::vector<long long> raw_labels;
    int arity = -1;
    long lineno = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        lineno = static_cast<long>(li + 1);
        if (has_header && li == 0) continue;
        if (lines[li].empty()) continue;
        const auto cells = split(lines[li], ',');
        if (arity < 0) {
            arity = static_cast<int>(cells.size());
            if (arity < 2) throw parse_error(source, lineno, "need at least 2 columns");
        } else if (static_cast<int>(cells.size()) != arity) {
            throw parse_error(source, lineno,
                              "expected " + std::to_string(arity) + " fields, got " +
                                  std::to_string(cells.size()));
        }
        const int label_at = label_column < 0 ? arity - 1 : label_column;
        if (label_at >= arity) throw parse_error(source, lineno, "label column out of range");
        for (int c = 0; c < arity; ++c) {
            double v;
            if (!parse_double(cells[c], v))
                throw parse_error(source, lineno, "non-numeric cell in column " +
                                                      std::to_string(c + 1));
            if (c == label_at) {
                const double r = std::round(v);
                if (std::abs(v - r) > 1e-9)
                    throw parse_error(source, lineno, "label is not an integer");
                raw_labels.push_back(static_cast<long long>(r));
            } else {
                check_finite(v, source, lineno);
                d.features.push_back(v);
            }
        }
        ++d.samples;
    }
    if (d.samples == 0) throw parse_error(source, std::max(lineno, 1L), "empty dataset file");
    d.dims = arity - 1;
    remap_labels(raw_labels, d, source);
    return d;
}

void save_csv(const Dataset& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path.string());
    char buf[40];
    for (int i = 0; i < d.samples; ++i) {
        const auto x = d.sample(i);
        for (int c = 0; c < d.dims; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", x[c]);
            out << buf << ',';
        }
        out << d.labels[i] << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Dataset load_sparse(const std::filesystem::path& path, const std::string& name) {
    const std::string source = path.string();
    const std::vector<std::string> lines = read_lines(path);

    std::vector<long long> raw_labels;
    std::vector<std::vector<std::pair<int, double>>> rows;
    int max_index = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const long lineno = static_cast<long>(li + 1);
        if (lines[li].empty()) continue;
        std::istringstream ss(lines[li]);
        std::string token;
        if (!(ss >> token)) continue;
        double label;
        if (!parse_double(token, label) || std::abs(label - std::round(label)) > 1e-9)
            throw parse_error(source, lineno, "label is not an integer");
        raw_labels.push_back(static_cast<long long>(std::round(label)));
        std::vector<std::pair<int, double>> row;
        while (ss >> token) {
            const std::size_t colon = token.find(':');
            if (colon == std::string::npos)
                throw parse_error(source, lineno, "expected index:value, got '" + token + "'");
            double idx_d, value;
            if (!parse_double(token.substr(0, colon), idx_d) ||
                !parse_double(token.substr(colon + 1), value))
                throw parse_error(source, lineno, "bad index:value pair '" + token + "'");
            const int idx = static_cast<int>(idx_d);
            if (idx < 1) throw parse_error(source, lineno, "feature indices are 1-based");
            check_finite(value, source, lineno);
            max_index = std::max(max_index, idx);
            row.emplace_back(idx - 1, value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error(source + ": empty dataset file");

    Dataset d;
    d.name = name.empty() ? path.stem().string() : name;
    d.samples = static_cast<int>(rows.size());
    d.dims = max_index;
    d.features.assign(static_cast<std::size_t>(d.samples) * d.dims, 0.0);
    for (int i = 0; i < d.samples; ++i)
        for (const auto& [idx, value] : rows[i])
            d.features[static_cast<std::size_t>(i) * d.dims + idx] = value;
    remap_labels(raw_labels, d, source);
    return d;
}

Dataset make_blobs(int classes, int samples_per_class, int dims, double separation,
                   std::uint64_t seed) {
    if (classes < 1 || samples_per_class < 1 || dims < 1 || separation <= 0.0)
        throw std::invalid_argument("make_blobs arguments must be positive");

    // Centers drawn uniformly in a box, rejecting any closer than `separation`
    // to an accepted one; the box doubles whenever placement stalls, so the
    // loop terminates for any separation.
    Rng center_rng = Rng::substream(seed, 0);
    std::vector<std::vector<double>> centers;
    double box = separation * std::max(4.0, static_cast<double>(classes));
    while (true) {
        centers.clear();
        bool ok = true;
        for (int c = 0; c < classes && ok; ++c) {
            bool placed = false;
            for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
                std::vector<double> p(dims);
                for (double& v : p) v = center_rng.uniform01() * box;
                placed = true;
                for (const auto& q : centers) {
                    double d2 = 0;
                    for (int t = 0; t < dims; ++t) d2 += (p[t] - q[t]) * (p[t] - q[t]);
                    if (d2 < separation * separation) {
                        placed = false;
                        break;
                    }
                }
                if (placed) centers.push_back(std::move(p));
            }
            ok = placed;
        }
        if (ok) break;
        box *= 2.0;
    }

    Dataset d;
    d.name = "blobs";
    d.classes = classes;
    d.dims = dims;
    d.samples = classes * samples_per_class;
    d.features.reserve(static_cast<std::size_t>(d.samples) * dims);
    d.labels.reserve(d.samples);
    d.label_names.resize(classes);
    for (int c = 0; c < classes; ++c) {
        d.label_names[c] = c;
        Rng rng = Rng::substream(seed, 1 + static_cast<std::uint64_t>(c));
        for (int s = 0; s < samples_per_class; ++s) {
            for (int t = 0; t < dims; ++t)
                d.features.push_back(centers[c][t] + rng.normal());
            d.labels.push_back(c);
        }
    }
    return d;
}

FoldAssignment stratified_folds(const Dataset& d, int folds, std::uint64_t seed) {
    if (folds < 2) throw std::invalid_argument("need at least 2 folds");
    std::vector<std::vector<int>> by_class(d.classes);
    for (int i = 0; i < d.samples; ++i) by_class[d.labels[i]].push_back(i);
    for (int c = 0; c < d.classes; ++c)
        if (static_cast<int>(by_class[c].size()) < folds)
            throw std::invalid_argument("class " + std::to_string(c) + " has " +
                                        std::to_string(by_class[c].size()) +
                                        " samples, fewer than " + std::to_string(folds) +
                                        " folds");
    FoldAssignment fa;
    fa.folds = folds;
    fa.fold_of.assign(d.samples, 0);
    for (int c = 0; c < d.classes; ++c) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(c));
        rng.shuffle(by_class[c]);
        for (std::size_t t = 0; t < by_class[c].size(); ++t)
            fa.fold_of[by_class[c][t]] = static_cast<int>(t % folds);
    }
    return fa;
}

}  // namespace necoc
