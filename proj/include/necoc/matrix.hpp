#ifndef NECOC_MATRIX_HPP
#define NECOC_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace necoc {

// One matrix entry. Values always satisfy value < base of the owning matrix.
using Symbol = std::uint8_t;

// A c x n grid of symbols over the alphabet {0..N-1}, stored row-major.
// Immutable in spirit: all construction routines return a finished matrix and
// never mutate a shared one, so instances are safe to read concurrently.
class CodingMatrix {
public:
    CodingMatrix(int base, int rows, int cols);
    CodingMatrix(int base, int rows, int cols, std::vector<Symbol> entries);
    // Convenience for literal matrices in tests and fixtures.
    CodingMatrix(int base, std::initializer_list<std::initializer_list<int>> rows);

    int base() const { return base_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Symbol at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Symbol v);

    std::span<const Symbol> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * cols_,
                static_cast<std::size_t>(cols_)};
    }
    std::vector<Symbol> column(int j) const;
    std::span<const Symbol> entries() const { return entries_; }

    CodingMatrix transposed() const;
    bool is_symmetric() const;

    // Entrywise equality including the declared base: identical grids over
    // different alphabets compare unequal.
    friend bool operator==(const CodingMatrix&, const CodingMatrix&) = default;

private:
    int base_;
    int rows_;
    int cols_;
    std::vector<Symbol> entries_;
};

}  // namespace necoc

#endif
