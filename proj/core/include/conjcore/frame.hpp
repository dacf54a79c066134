#pragma once

#include "conjcore/algebra_map.hpp"
#include "conjcore/report.hpp"
#include "conjcore/upoly.hpp"

#include <optional>

namespace conjtk {

/// Cohomology frame data for a space with involution: the even ring A
/// (cohomology of the space, concentrated in even degrees), the fixed ring B
/// (cohomology of the real locus), the degree-halving map kappa on
/// generators, and the equivariant restriction r∘σ stored on generators as
/// u-polynomials over B and extended multiplicatively.
///
/// Construction is deliberately permissive: it enforces only arities and ring
/// identities so that broken frames can be built and then rejected, with
/// witnesses, by verify_frame.
class ConjugationFrame {
public:
    ConjugationFrame(GradedAlgebra even_ring, GradedAlgebra fixed_ring, AlgebraMap kappa,
                     std::vector<UPoly> rsigma);

    const GradedAlgebra& even_ring() const { return even_; }
    const GradedAlgebra& fixed_ring() const { return fixed_; }
    const AlgebraMap& kappa() const { return kappa_; }
    const std::vector<UPoly>& rsigma() const { return rsigma_; }
    const UPoly& rsigma(std::size_t gen) const { return rsigma_[gen]; }
    int cutoff() const;

private:
    GradedAlgebra even_;
    GradedAlgebra fixed_;
    AlgebraMap kappa_;
    std::vector<UPoly> rsigma_;
};

/// r̂(σ(a)·u^j): expresses a in generators, substitutes the stored
/// u-polynomials multiplicatively and shifts by u^j. Requires a homogeneous
/// with deg(a) + j within the cutoff.
UPoly restrict_class(const ConjugationFrame& frame, const Polynomial& a, int u_exp = 0);

/// Axiom suite, in order: (1) even ring has even generators only; (2) kappa
/// well defined; (3) kappa bijective degreewise up to the cutoff; (4) each
/// generator's u-polynomial has the conjugation-equation shape with leading
/// coefficient kappa(a); (5) the multiplicative extension annihilates every
/// relation of A; (6) unit and degree-0 normalization. Failures carry the
/// first witness; nothing throws.
Report verify_frame(const ConjugationFrame& frame);

struct InjectivityResult {
    bool injective = true;
    int witness_degree = -1;
    std::string witness; // kernel element as a combination of sigma(basis)*u^j
};

/// Degreewise kernel scan of r̂ on A[u] through the cutoff.
InjectivityResult check_injectivity_r(const ConjugationFrame& frame);

struct LocalizeResult {
    bool finite_dimensional = false;
    int top_degree = -1; // largest degree with dim A nonzero
    Report report;
    /// Per generator: r̂(σ(gen)) evaluated at u = 1 and all fixed-ring
    /// generators = 1.
    std::vector<int> fiber_values;
};

/// Localization behavior: when A is finite dimensional below the cutoff,
/// verifies (largest degrees first) that every fixed-ring basis element in
/// reach becomes hit by r̂ after multiplying by some u^k, k <= top degree.
/// Always reports the u=1, generators=1 evaluation of the generators'
/// restrictions.
LocalizeResult localize_check(const ConjugationFrame& frame);

struct HalvingResult {
    Series even;
    Series fixed;
    bool halves = false;
};

/// Hilbert series of both rings plus the halving verdict
/// P_A(t) = P_B(t^2) through the cutoff.
HalvingResult halving_series(const ConjugationFrame& frame);

/// Map of frames covering an equivariant map: the even-ring map and the
/// fixed-ring map it forces.
class FrameMorphism {
public:
    FrameMorphism(ConjugationFrame source, ConjugationFrame target, AlgebraMap even_map,
                  AlgebraMap fixed_map);

    const ConjugationFrame& source() const { return source_; }
    const ConjugationFrame& target() const { return target_; }
    const AlgebraMap& even_map() const { return even_map_; }
    const AlgebraMap& fixed_map() const { return fixed_map_; }

private:
    ConjugationFrame source_;
    ConjugationFrame target_;
    AlgebraMap even_map_;
    AlgebraMap fixed_map_;
};

/// Checks that both maps are well defined, that they commute with kappa on
/// generators, and that the fixed map applied coefficientwise to the stored
/// u-polynomials matches restriction of the mapped generators in the target.
Report verify_naturality(const FrameMorphism& m);

FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f);

/// Thom data of a conjugate-equivariant bundle over a frame: free rank-one
/// module over the base in degree 2*rank, with restriction factor
/// omega = sum_j w_j u^(rank-j). Coefficients live in B through the Thom
/// identification, the degree-rank fixed Thom class being the implicit module
/// generator; as a u-polynomial over B, omega has total degree rank.
class FrameModule {
public:
    FrameModule(ConjugationFrame base, int rank, UPoly omega, Polynomial euler);

    const ConjugationFrame& base() const { return base_; }
    int rank() const { return rank_; }
    int thom_degree() const { return 2 * rank_; }
    const UPoly& omega() const { return omega_; }
    const Polynomial& euler() const { return euler_; }

    /// Restriction of the module class T*a (times u^j), under the Thom
    /// identification of the fixed side with B.
    UPoly module_restrict(const Polynomial& a, int u_exp = 0) const;

    /// Leading coefficient of omega is 1, u^0 coefficient is kappa(euler).
    Report verify() const;

private:
    ConjugationFrame base_;
    int rank_;
    UPoly omega_;
    Polynomial euler_;
};

} // namespace conjtk
