#pragma once

#include <cstdint>
#include <vector>

namespace conjtk {

/// Monomial as a dense exponent vector over a fixed generator list. The
/// coefficient is implicitly 1: everything here lives over the two-element
/// field, so a polynomial is just a finite set of monomials.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t ngens) : exps(ngens, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    // Braced lists are exponent vectors, never arities.
    Monomial(std::initializer_list<int> e) : exps(e) {}

    bool is_one() const;
    int total_exponent() const;
    int weighted_degree(const std::vector<int>& weights) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    /// Representation order only (plain lexicographic); the graded order used
    /// for reduction lives in GradedAlgebra.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, int e);

/// Set of monomials, kept sorted (representation order) and duplicate-free.
/// Addition is symmetric difference; the zero polynomial is the empty set.
struct Polynomial {
    std::vector<Monomial> monos;

    Polynomial() = default;
    explicit Polynomial(std::vector<Monomial> ms);
    static Polynomial zero() { return Polynomial(); }

    bool is_zero() const { return monos.empty(); }
    std::size_t size() const { return monos.size(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.monos == b.monos; }
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul_mono(const Polynomial& a, const Monomial& m);
Polynomial poly_mul_raw(const Polynomial& a, const Polynomial& b); // no reduction

} // namespace conjtk
