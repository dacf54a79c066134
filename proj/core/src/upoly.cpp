#include "conjcore/upoly.hpp"

#include <sstream>

namespace conjtk {

UPoly::UPoly(GradedAlgebra ring, int total_degree)
    : ring_(std::move(ring)), total_degree_(total_degree),
      coeffs_(static_cast<std::size_t>(total_degree) + 1) {
    if (total_degree < 0)
        throw AlgebraError("u-polynomial total degree must be nonnegative");
    if (total_degree > ring_.cutoff())
        throw DegreeError("u-polynomial total degree above the ring cutoff");
}

UPoly::UPoly(GradedAlgebra ring, int total_degree, std::vector<Polynomial> coeffs)
    : UPoly(std::move(ring), total_degree) {
    if (coeffs.size() > coeffs_.size())
        throw AlgebraError("u-polynomial has coefficients above u^total_degree");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Polynomial c = ring_.normal_form(std::move(coeffs[i]));
        if (c.is_zero())
            continue;
        if (!ring_.is_homogeneous(c) || ring_.degree(c) != total_degree_ - static_cast<int>(i))
            throw AlgebraError("u^" + std::to_string(i) + " coefficient " + ring_.format(c) +
                               " is not homogeneous of degree " +
                               std::to_string(total_degree_ - static_cast<int>(i)));
        coeffs_[i] = std::move(c);
    }
}

UPoly UPoly::term(const GradedAlgebra& ring, const Polynomial& coeff, int u_exp) {
    const Polynomial c = ring.normal_form(coeff);
    if (c.is_zero())
        return UPoly(ring, u_exp);
    if (!ring.is_homogeneous(c))
        throw AlgebraError("u-polynomial coefficient must be homogeneous");
    std::vector<Polynomial> coeffs(u_exp + 1);
    coeffs[u_exp] = c;
    return UPoly(ring, ring.degree(c) + u_exp, std::move(coeffs));
}

bool UPoly::is_zero() const {
    for (const Polynomial& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

int UPoly::u_degree() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (!coeffs_[i].is_zero())
            return i;
    return -1;
}

const Polynomial& UPoly::coeff(int u_exp) const {
    static const Polynomial kZero;
    if (u_exp < 0 || u_exp >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[u_exp];
}

UPoly UPoly::shifted_u(int j) const {
    UPoly out(ring_, total_degree_ + j);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i + j] = coeffs_[i];
    return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    if (a.total_degree_ != b.total_degree_)
        throw AlgebraError("u-polynomial addition requires equal total degrees");
    UPoly out(a.ring_, a.total_degree_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = poly_add(a.coeffs_[i], b.coeffs_[i]);
    return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out(a.ring_, a.total_degree_ + b.total_degree_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            out.coeffs_[i + j] =
                poly_add(out.coeffs_[i + j], poly_mul_raw(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    for (Polynomial& c : out.coeffs_)
        c = out.ring_.normal_form(std::move(c));
    return out;
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.total_degree_ != b.total_degree_)
        return a.is_zero() && b.is_zero();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i]))
            return false;
    return true;
}

UPoly UPoly::pow(int e) const {
    UPoly out(ring_, 0, {ring_.one()});
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

int UPoly::eval_all_ones() const {
    std::size_t count = 0;
    for (const Polynomial& c : coeffs_)
        count += c.monos.size();
    return static_cast<int>(count % 2);
}

std::string UPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        if (coeffs_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        const std::string c = ring_.format(coeffs_[i]);
        const bool unit = coeffs_[i].size() == 1 && coeffs_[i].monos[0].is_one();
        const bool needs_parens = coeffs_[i].size() > 1;
        if (i == 0) {
            os << c;
        } else {
            if (!unit)
                os << (needs_parens ? "(" + c + ")" : c) << '*';
            os << 'u';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

} // namespace conjtk
