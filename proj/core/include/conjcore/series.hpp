#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conjtk {

/// Truncated power series with nonnegative integer coefficients, indexed by
/// degree. Coefficients past the stored length read as zero, so series of
/// different lengths compare by value.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

    static Series zero() { return Series(); }
    static Series one(int len = 1);
    /// 1/(1 - t^step) truncated at `cutoff`.
    static Series geometric(int step, int cutoff);

    std::int64_t at(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs_.size())) ? coeffs_[d] : 0;
    }
    void set(int d, std::int64_t v);
    int max_stored() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    Series truncated(int cutoff) const;
    Series shifted(int by) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series convolve(const Series& a, const Series& b, int cutoff);
    friend bool operator==(const Series& a, const Series& b);

    /// P_even(t) == P_fixed(t^2) coefficientwise for all degrees <= cutoff.
    static bool halving(const Series& even, const Series& fixed, int cutoff);

    std::string str() const;

private:
    std::vector<std::int64_t> coeffs_;
};

} // namespace conjtk
