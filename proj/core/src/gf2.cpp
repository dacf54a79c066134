#include "conjcore/gf2.hpp"

#include <stdexcept>

namespace conjtk {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) {
    return (cols + kWordBits - 1) / kWordBits;
}
} // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = bits_[r * words_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w)
        bits_[dst * words_ + w] ^= bits_[src * words_ + w];
}

void Gf2Matrix::append_row() {
    bits_.resize(bits_.size() + words_, 0);
    ++rows_;
}

void Gf2Matrix::append_row(const std::vector<std::size_t>& support) {
    append_row();
    for (std::size_t c : support)
        set(rows_ - 1, c);
}

std::size_t Gf2Matrix::echelonize() {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        std::size_t r = pivot_row;
        while (r < rows_ && !get(r, c))
            ++r;
        if (r == rows_)
            continue;
        if (r != pivot_row)
            for (std::size_t w = 0; w < words_; ++w)
                std::swap(bits_[r * words_ + w], bits_[pivot_row * words_ + w]);
        for (std::size_t r2 = 0; r2 < rows_; ++r2)
            if (r2 != pivot_row && get(r2, c))
                xor_row(r2, pivot_row);
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix copy = *this;
    return copy.echelonize();
}

Gf2Span::Gf2Span(std::size_t cols) : cols_(cols), words_(words_for(cols)) {}

int Gf2Span::leading_bit(const std::vector<std::uint64_t>& row) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        if (row[w]) {
            std::uint64_t word = row[w];
            int bit = 0;
            while (!(word & 1)) {
                word >>= 1;
                ++bit;
            }
            return static_cast<int>(w * kWordBits) + bit;
        }
    }
    return -1;
}

void Gf2Span::reduce(std::vector<std::uint64_t>& row) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((row[p / kWordBits] >> (p % kWordBits)) & 1)
            for (std::size_t w = 0; w < words_; ++w)
                row[w] ^= basis_[i][w];
    }
}

bool Gf2Span::insert(const std::vector<std::uint64_t>& row) {
    std::vector<std::uint64_t> v = row;
    reduce(v);
    const int lead = leading_bit(v);
    if (lead < 0)
        return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(static_cast<std::size_t>(lead));
    return true;
}

std::vector<std::uint64_t> Gf2Span::make_row(const std::vector<std::size_t>& support) const {
    std::vector<std::uint64_t> row(words_, 0);
    for (std::size_t c : support)
        row[c / kWordBits] ^= std::uint64_t(1) << (c % kWordBits);
    return row;
}

bool Gf2Span::insert_support(const std::vector<std::size_t>& support) {
    return insert(make_row(support));
}

bool Gf2Span::contains(std::vector<std::uint64_t> row) const {
    reduce(row);
    return leading_bit(row) < 0;
}

bool Gf2Span::contains_support(const std::vector<std::size_t>& support) const {
    return contains(make_row(support));
}

std::vector<std::vector<std::size_t>> left_kernel(const Gf2Matrix& m) {
    // Augment [m | I] and eliminate; zero rows of the m-part expose kernel
    // combinations in the identity part.
    const std::size_t n = m.rows();
    Gf2Matrix aug(n, m.cols() + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c);
        aug.set(r, m.cols() + r);
    }

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < n; ++c) {
        std::size_t r = pivot_row;
        while (r < n && !aug.get(r, c))
            ++r;
        if (r == n)
            continue;
        if (r != pivot_row)
            for (std::size_t c2 = 0; c2 < aug.cols(); ++c2) {
                const bool a = aug.get(r, c2);
                const bool b = aug.get(pivot_row, c2);
                aug.set(r, c2, b);
                aug.set(pivot_row, c2, a);
            }
        for (std::size_t r2 = 0; r2 < n; ++r2)
            if (r2 != pivot_row && aug.get(r2, c))
                aug.xor_row(r2, pivot_row);
        ++pivot_row;
    }

    std::vector<std::vector<std::size_t>> kernel;
    for (std::size_t r = pivot_row; r < n; ++r) {
        std::vector<std::size_t> combo;
        for (std::size_t c = 0; c < n; ++c)
            if (aug.get(r, m.cols() + c))
                combo.push_back(c);
        if (!combo.empty())
            kernel.push_back(std::move(combo));
    }
    return kernel;
}

std::optional<std::vector<std::size_t>> solve_left(const Gf2Matrix& m,
                                                   const std::vector<std::size_t>& target_support) {
    const std::size_t n = m.rows();
    Gf2Matrix aug(n + 1, m.cols() + n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c);
        aug.set(r, m.cols() + r);
    }
    for (std::size_t c : target_support)
        aug.set(n, c);
    aug.set(n, m.cols() + n);

    // Eliminate using only the first n rows as pivot sources so that the
    // target row never contributes a pivot inside the m-columns.
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < n; ++c) {
        std::size_t r = pivot_row;
        while (r < n && !aug.get(r, c))
            ++r;
        if (r == n)
            continue;
        if (r != pivot_row)
            for (std::size_t c2 = 0; c2 < aug.cols(); ++c2) {
                const bool a = aug.get(r, c2);
                const bool b = aug.get(pivot_row, c2);
                aug.set(r, c2, b);
                aug.set(pivot_row, c2, a);
            }
        for (std::size_t r2 = 0; r2 <= n; ++r2)
            if (r2 != pivot_row && aug.get(r2, c))
                aug.xor_row(r2, pivot_row);
        ++pivot_row;
    }

    for (std::size_t c = 0; c < m.cols(); ++c)
        if (aug.get(n, c))
            return std::nullopt;
    std::vector<std::size_t> combo;
    for (std::size_t c = 0; c < n; ++c)
        if (aug.get(n, m.cols() + c))
            combo.push_back(c);
    return combo;
}

} // namespace conjtk
