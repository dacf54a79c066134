#pragma once

#include "conjcore/algebra.hpp"

#include <vector>

namespace conjtk {

/// Rewrites a symmetric polynomial in k degree-one variables as a polynomial
/// in the elementary symmetric polynomials e_1..e_k; the result is returned
/// as exponent vectors over (e_1, ..., e_k). Throws if the input is not
/// symmetric.
std::vector<Monomial> elementary_reduce(const GradedAlgebra& xring, Polynomial symmetric);

/// u-expansion of prod_j (1 + x_j u + x_j^2) over k splitting variables:
/// result[i][s] is the coefficient of u^s in the total-degree-2i piece,
/// written in the elementary basis (exponents over e_1..e_k). Entries with
/// s > i are empty.
std::vector<std::vector<std::vector<Monomial>>> splitting_expansion(int k);

} // namespace conjtk
