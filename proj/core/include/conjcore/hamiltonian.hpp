#pragma once

#include "conjcore/frame.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace conjtk {

using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& text); // "p", "-p", "p/q"
std::string format_rational(const Rational& r);

/// Character of the torus with the complex rank of its weight bundle.
struct IsotropyWeight {
    std::vector<long long> chi;
    int multiplicity = 1;
};

/// One fixed component: its own frame, its moment image, and the isotropy
/// weights of its normal bundle.
struct FixedComponent {
    std::string name;
    ConjugationFrame frame;
    std::vector<Rational> moment;
    std::vector<IsotropyWeight> weights;
};

struct HamiltonianData {
    int rank = 1;
    std::vector<FixedComponent> components;
};

struct HamiltonianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateDirection : HamiltonianError {
    using HamiltonianError::HamiltonianError;
};
struct WallError : HamiltonianError {
    using HamiltonianError::HamiltonianError;
};

struct DirectionCheck {
    bool generic = true;
    std::string witness;
};

/// xi is generic iff it pairs nonzero with every isotropy weight and
/// separates components with distinct moment values.
DirectionCheck generic_direction(const HamiltonianData& data, const std::vector<long long>& xi);

struct MorseSeriesResult {
    Series total;      // assembled series of the manifold
    Series real_locus; // assembled series of the real locus
    bool halves = false;
    std::vector<int> indices; // Morse index 2*lambda_F per component (even side)
};

/// Morse assembly along a generic direction: each component contributes its
/// own series shifted by twice (resp. once) the number of negative weights.
MorseSeriesResult morse_series(const HamiltonianData& data, const std::vector<long long>& xi,
                               int cutoff);

/// The assembled series cannot depend on the direction.
bool xi_independence(const HamiltonianData& data, const std::vector<long long>& xi1,
                     const std::vector<long long>& xi2, int cutoff);

struct TwoTorsionHit {
    std::size_t component;
    std::size_t weight_index;
};

/// Flags every isotropy weight all of whose coordinates are even.
std::vector<TwoTorsionHit> two_torsion_scan(const HamiltonianData& data);

/// True iff the fixed sets of the torus and of its 2-torus agree, i.e. no
/// weight is divisible by 2.
bool mt2_check(const HamiltonianData& data);

struct EquivariantSeriesResult {
    Series torus;     // series of the Borel construction for the torus
    Series two_torus; // series of the 2-torus Borel construction on the real locus
    bool halves = false;
};

/// Equivariant series: the manifold series times one geometric factor per
/// torus coordinate, and the doubled identity between them.
EquivariantSeriesResult equivariant_series(const HamiltonianData& data,
                                           const std::vector<long long>& xi, int cutoff);

/// One fixed point or component of an explicit equivariant presentation: a
/// restriction map into its own equivariant cohomology (the polynomial ring
/// on the torus generators for an isolated point).
struct PresRestriction {
    std::string point;
    std::vector<Rational> moment;
    AlgebraMap map; // source = the presentation algebra
};

/// GKM-style explicit presentation of the equivariant cohomology of a
/// Hamiltonian manifold, with per-component restrictions.
struct EquivariantPresentation {
    GradedAlgebra algebra;
    int rank = 1;
    std::vector<PresRestriction> restrictions;
};

/// The joint restriction must be injective degreewise up to the cutoff.
Report check_presentation(const EquivariantPresentation& pres);

struct TwKernelResult {
    Series kernel;
    Series reduced;
    /// -1: no reference series supplied; 0/1: halving verdict against it.
    int halving_verdict = -1;
    /// Degreewise basis of the kernel ideal.
    std::vector<std::vector<Polynomial>> kernel_basis;
    Report report;
};

/// Kernel of the reduction map at level mu: for each direction, the classes
/// whose restrictions vanish on every component on the nonpositive side of
/// the wall through mu; the kernel ideal is generated by all of these.
/// Throws WallError when mu lies on a wall and HamiltonianError when the
/// joint restriction is not injective.
TwKernelResult tw_kernel(const EquivariantPresentation& pres,
                         const std::vector<std::vector<long long>>& xi_set,
                         const std::vector<Rational>& mu,
                         const std::optional<Series>& real_reduced_series = std::nullopt);

} // namespace conjtk
