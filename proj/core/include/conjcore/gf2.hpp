#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace conjtk {

/// Dense bit matrix over the two-element field. Rows are the primary axis;
/// all degreewise rank/kernel/membership computations in the library reduce
/// to row operations on these.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v = true);
    bool get(std::size_t r, std::size_t c) const;
    void xor_row(std::size_t dst, std::size_t src);
    void append_row();
    void append_row(const std::vector<std::size_t>& support);

    /// In-place Gauss elimination to row echelon form; returns the rank.
    std::size_t echelonize();

    /// Rank without disturbing the matrix.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;

    friend class Gf2Span;
};

/// Incrementally maintained row space: supports membership tests, dimension
/// queries and combination tracking. Used for span/kernel bookkeeping where
/// vectors arrive one at a time.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t cols);

    std::size_t dim() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    /// Inserts a vector; returns true if it enlarged the span.
    bool insert(const std::vector<std::uint64_t>& row);
    bool insert_support(const std::vector<std::size_t>& support);

    /// True iff the vector already lies in the span.
    bool contains(std::vector<std::uint64_t> row) const;
    bool contains_support(const std::vector<std::size_t>& support) const;

    std::size_t words() const { return words_; }
    std::vector<std::uint64_t> make_row(const std::vector<std::size_t>& support) const;

private:
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivots_;

    void reduce(std::vector<std::uint64_t>& row) const;
    static int leading_bit(const std::vector<std::uint64_t>& row);
};

/// Basis of the left kernel of `m`: all rows x with x·m = 0, as supports of
/// the input rows entering each combination.
std::vector<std::vector<std::size_t>> left_kernel(const Gf2Matrix& m);

/// Solves x·m = target for x, if possible; returns the support of x over the
/// rows of m.
std::optional<std::vector<std::size_t>> solve_left(const Gf2Matrix& m,
                                                   const std::vector<std::size_t>& target_support);

} // namespace conjtk
