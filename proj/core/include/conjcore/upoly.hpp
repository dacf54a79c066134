#pragma once

#include "conjcore/algebra.hpp"

namespace conjtk {

/// Element of B[u] (u of degree one) with topological-degree bookkeeping:
/// a class of total degree d has its u^i coefficient homogeneous of B-degree
/// d-i. These model equivariant classes over a real locus; the image of a
/// degree-2m class under the equivariant restriction has u-degree at most m,
/// which verify_frame checks where it is required.
class UPoly {
public:
    UPoly(GradedAlgebra ring, int total_degree);
    UPoly(GradedAlgebra ring, int total_degree, std::vector<Polynomial> coeffs);

    static UPoly term(const GradedAlgebra& ring, const Polynomial& coeff, int u_exp);

    const GradedAlgebra& ring() const { return ring_; }
    int total_degree() const { return total_degree_; }
    bool is_zero() const;
    /// Largest u-exponent carrying a nonzero coefficient; -1 if zero.
    int u_degree() const;
    const Polynomial& coeff(int u_exp) const;

    UPoly shifted_u(int j) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b);

    UPoly pow(int e) const;

    /// Value in the two-element field after sending u and every ring
    /// generator to 1.
    int eval_all_ones() const;

    std::string str() const;

private:
    GradedAlgebra ring_;
    int total_degree_ = 0;
    std::vector<Polynomial> coeffs_; // index = u-exponent, size total_degree_+1
};

} // namespace conjtk
