#pragma once

#include "conjcore/polynomial.hpp"
#include "conjcore/series.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conjtk {

struct Generator {
    std::string name;
    int degree = 0;

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.name == b.name && a.degree == b.degree;
    }
};

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Raised when an operand lives above the ring's degree cutoff.
struct DegreeError : AlgebraError {
    using AlgebraError::AlgebraError;
};
/// Raised when the basis engine exceeds its configured resource budget.
struct CutoffError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct AlgebraOptions {
    /// Upper bound on Buchberger reduction steps before giving up.
    long long reduction_limit = 8'000'000;
};

/// Finitely presented graded-commutative algebra over the two-element field,
/// truncated at a degree cutoff. Values are immutable; copies share state.
///
/// Monomial order: graded by generator weights, ties broken so that monomials
/// heavier in later-listed generators lead. Auxiliary generators listed last
/// are therefore eliminated first by the reduced basis.
class GradedAlgebra {
public:
    /// The two-element field itself (no generators).
    explicit GradedAlgebra(int cutoff = 24);

    static GradedAlgebra free_algebra(std::vector<Generator> gens, int cutoff,
                                      AlgebraOptions opts = {});
    static GradedAlgebra presented(std::vector<Generator> gens, std::vector<Polynomial> relations,
                                   int cutoff, AlgebraOptions opts = {});

    int cutoff() const;
    std::size_t ngens() const;
    const std::vector<Generator>& generators() const;
    const std::vector<int>& weights() const;
    int generator_index(std::string_view name) const; // -1 if absent
    const std::vector<Polynomial>& relations() const;
    /// Reduced Groebner basis of the relation ideal, valid up to the cutoff.
    const std::vector<Polynomial>& groebner_basis() const;

    int degree(const Monomial& m) const;
    /// Max weighted degree over the support; -1 for the zero polynomial.
    int degree(const Polynomial& p) const;
    bool is_homogeneous(const Polynomial& p) const;
    /// Homogeneous component of p in the given degree.
    Polynomial component(const Polynomial& p, int degree) const;

    bool mono_less(const Monomial& a, const Monomial& b) const;
    const Monomial& leading(const Polynomial& p) const;

    Polynomial normal_form(Polynomial p) const;
    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial pow(const Polynomial& a, int e) const;
    Polynomial zero() const { return Polynomial(); }
    Polynomial one() const;
    Polynomial gen(std::size_t i) const;

    Series hilbert() const;
    /// Standard monomials of the given degree, sorted; the degreewise vector
    /// space basis used by every linear-algebra pass.
    const std::vector<Monomial>& basis(int degree) const;
    /// Coordinates of a normal-form homogeneous polynomial in basis(degree).
    std::vector<std::size_t> coords(const Polynomial& p, int degree) const;

    Polynomial parse(std::string_view text) const;
    std::string format(const Polynomial& p) const;
    std::string format(const Monomial& m) const;

    bool same_presentation(const GradedAlgebra& other) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit GradedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

struct TensorResult {
    GradedAlgebra ring;
    std::vector<std::size_t> left;  // generator index map, left factor -> ring
    std::vector<std::size_t> right; // generator index map, right factor -> ring
};

/// Tensor product: disjoint generators (right factor renamed on collision),
/// both relation lists, cutoff the minimum of the two.
TensorResult tensor(const GradedAlgebra& a, const GradedAlgebra& b);

/// Reindexes a polynomial along a generator map into a larger ring.
Polynomial embed(const Polynomial& p, const std::vector<std::size_t>& gen_map,
                 std::size_t target_ngens);

} // namespace conjtk
