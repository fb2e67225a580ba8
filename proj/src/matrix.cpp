#include "necoc/matrix.hpp"

#include <stdexcept>
#include <string>

namespace necoc {

namespace {

void check_shape(int base, int rows, int cols) {
    if (base < 2) throw std::invalid_argument("matrix base must be >= 2");
    if (base > 256) throw std::invalid_argument("matrix base must fit a byte symbol");
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
}

}  // namespace

CodingMatrix::CodingMatrix(int base, int rows, int cols)
    : base_(base), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, 0) {
    check_shape(base, rows, cols);
}

CodingMatrix::CodingMatrix(int base, int rows, int cols, std::vector<Symbol> entries)
    : base_(base), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_shape(base, rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows x cols");
    for (Symbol v : entries_)
        if (v >= base)
            throw std::invalid_argument("entry " + std::to_string(int(v)) +
                                        " out of range for base " + std::to_string(base));
}

CodingMatrix::CodingMatrix(int base, std::initializer_list<std::initializer_list<int>> rows)
    : base_(base), rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.size() == 0) throw std::invalid_argument("matrix needs at least one row");
    cols_ = static_cast<int>(rows.begin()->size());
    check_shape(base, rows_, cols_);
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged initializer rows");
        for (int v : r) {
            if (v < 0 || v >= base_)
                throw std::invalid_argument("entry " + std::to_string(v) +
                                            " out of range for base " + std::to_string(base_));
            entries_.push_back(static_cast<Symbol>(v));
        }
    }
}

void CodingMatrix::set(int i, int j, Symbol v) {
    if (v >= base_)
        throw std::invalid_argument("entry " + std::to_string(int(v)) +
                                    " out of range for base " + std::to_string(base_));
    entries_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

std::vector<Symbol> CodingMatrix::column(int j) const {
    std::vector<Symbol> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

CodingMatrix CodingMatrix::transposed() const {
    CodingMatrix t(base_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.entries_[static_cast<std::size_t>(j) * rows_ + i] = at(i, j);
    return t;
}

bool CodingMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

}  // namespace necoc
