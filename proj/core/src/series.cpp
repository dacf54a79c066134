#include "conjcore/series.hpp"

#include <algorithm>
#include <sstream>

namespace conjtk {

Series Series::one(int len) {
    std::vector<std::int64_t> c(std::max(len, 1), 0);
    c[0] = 1;
    return Series(std::move(c));
}

Series Series::geometric(int step, int cutoff) {
    std::vector<std::int64_t> c(cutoff + 1, 0);
    for (int d = 0; d <= cutoff; d += step)
        c[d] = 1;
    return Series(std::move(c));
}

void Series::set(int d, std::int64_t v) {
    if (d >= static_cast<int>(coeffs_.size()))
        coeffs_.resize(d + 1, 0);
    coeffs_[d] = v;
}

Series Series::truncated(int cutoff) const {
    std::vector<std::int64_t> c(coeffs_.begin(),
                                coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), cutoff + 1));
    return Series(std::move(c));
}

Series Series::shifted(int by) const {
    std::vector<std::int64_t> c(coeffs_.size() + by, 0);
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        c[d + by] = coeffs_[d];
    return Series(std::move(c));
}

Series operator+(const Series& a, const Series& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t d = 0; d < c.size(); ++d)
        c[d] = a.at(static_cast<int>(d)) + b.at(static_cast<int>(d));
    return Series(std::move(c));
}

Series convolve(const Series& a, const Series& b, int cutoff) {
    std::vector<std::int64_t> c(cutoff + 1, 0);
    const int na = a.max_stored();
    for (int i = 0; i <= std::min(na, cutoff); ++i) {
        if (!a.at(i))
            continue;
        const int nb = std::min(b.max_stored(), cutoff - i);
        for (int j = 0; j <= nb; ++j)
            c[i + j] += a.at(i) * b.at(j);
    }
    return Series(std::move(c));
}

bool operator==(const Series& a, const Series& b) {
    const int n = std::max(a.max_stored(), b.max_stored());
    for (int d = 0; d <= n; ++d)
        if (a.at(d) != b.at(d))
            return false;
    return true;
}

bool Series::halving(const Series& even, const Series& fixed, int cutoff) {
    for (int d = 0; d <= cutoff; ++d) {
        if (d % 2 == 1) {
            if (even.at(d) != 0)
                return false;
        } else if (even.at(d) != fixed.at(d / 2)) {
            return false;
        }
    }
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d)
            os << ',';
        os << coeffs_[d];
    }
    os << ']';
    return os.str();
}

} // namespace conjtk
