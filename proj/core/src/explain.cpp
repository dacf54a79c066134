#include "conjcore/explain.hpp"

#include <map>

namespace conjtk {

namespace {

const std::map<std::string, std::string, std::less<>>& catalog() {
    static const std::map<std::string, std::string, std::less<>> kCatalog = {
        {"even-ring",
         "A conjugation space has cohomology concentrated in even degrees; every generator of the "
         "even ring must sit in even degree."},
        {"kappa-well-defined",
         "kappa is a degree-halving ring homomorphism from the even ring to the fixed ring: "
         "generator images must have half the degree and every relation must map to zero."},
        {"kappa-iso",
         "kappa is an isomorphism dividing degrees in half: the even ring in degree 2m and the "
         "fixed ring in degree m have equal dimension and the images of a basis span, for every "
         "degree up to the cutoff."},
        {"conjugation-equation",
         "The conjugation equation: for a class a of degree 2m, the equivariant restriction of "
         "sigma(a) equals kappa(a)*u^m plus terms of lower u-degree. On each generator the stored "
         "u-polynomial must have u-degree at most m and top coefficient kappa(a)."},
        {"rsigma-relations",
         "The restriction extends multiplicatively to a ring homomorphism, since both kappa and "
         "sigma are ring maps; the extension applied to any relation of the even ring must reduce "
         "to zero in the fixed ring."},
        {"unit-normalization",
         "On degree zero, kappa agrees with the plain restriction to the real locus: it sends 1 to "
         "1, and the degree-zero pieces match."},
        {"injectivity-r",
         "Injectivity lemma: for a conjugation pair the restriction from the equivariant "
         "cohomology of the space to that of the real locus is injective. Checked degreewise by "
         "exact row reduction."},
        {"localization-surjective",
         "Localization: when the even ring vanishes above some degree, the restriction becomes an "
         "isomorphism after inverting u; every fixed-ring class is hit after multiplying by a "
         "bounded power of u."},
        {"localization-finite",
         "The surjectivity half of the localization check only applies to frames whose even ring "
         "vanishes above some degree below the cutoff; otherwise it is skipped."},
        {"localization-fiber",
         "Evaluation of the restricted generators at u = 1 and all fixed-ring generators = 1. For "
         "the infinite projective space this composite is the zero map (the restriction of the "
         "degree-2 generator is b*u + b^2, and 1 + 1 = 0), so localization alone cannot prove "
         "injectivity."},
        {"halving",
         "Poincaré-series shadow of kappa: the series of the even ring equals the series of the "
         "fixed ring evaluated at t^2, coefficientwise up to the cutoff."},
        {"naturality-maps",
         "A morphism of frames consists of well-defined ring maps on the even and fixed sides."},
        {"naturality-kappa",
         "Naturality of kappa: the fixed-side map composed with kappa of the source equals kappa "
         "of the target composed with the even-side map."},
        {"naturality-rsigma",
         "Naturality of the equivariant restriction: applying the fixed-side map coefficientwise "
         "to the stored restriction of a generator equals restricting its image in the target "
         "frame."},
        {"map-degrees",
         "Each generator image must be homogeneous of the scaled degree (equal degree, or half "
         "for degree-halving maps)."},
        {"map-relations", "Each source relation must map to zero in the target ring."},
        {"chern-sw-degrees",
         "The classes w_i = kappa(c_i) of the fixed real bundle are homogeneous of degree i."},
        {"chern-sw-total",
         "kappa carries the total mod-2 Chern class of a conjugate-equivariant bundle to the "
         "total Stiefel-Whitney class of its fixed real bundle."},
        {"euler-class",
         "kappa carries the mod-2 Euler class (the top Chern class) to the Euler class of the "
         "fixed real bundle (the top Stiefel-Whitney class)."},
        {"thom-leading",
         "The restriction of the Thom class has leading term (the fixed Thom class)*u^rank; the "
         "restriction factor is monic in u."},
        {"thom-euler",
         "Pulling the Thom class back to the zero section turns the restriction factor's constant "
         "coefficient into kappa of the Euler class."},
        {"leray-hirsch",
         "The fixed ring of a projectivized bundle is a free module over the base fixed ring on "
         "the powers 1, s, ..., s^(rank-1) of the hyperplane class."},
        {"stabilize",
         "A family of truncations of one colimit space must agree on all frame data in the "
         "degrees both truncations can see."},
        {"three-cell-q-even",
         "For a complex with three conjugation cells in dimensions 0, 2, 4, the degree-1 "
         "cohomology of the real locus is both Z_q (integrally) and Z_2 (mod 2), so q must be "
         "even."},
        {"three-cell-ring",
         "With invariants (p, q), the integral ring satisfies a^2 = p*b, so mod 2 the square of "
         "the degree-2 generator is (p mod 2) times the degree-4 generator."},
        {"three-cell-torsion",
         "The first integral cohomology of the real locus is cyclic of order q; distinct pairs "
         "(p, q) give distinct equivariant homotopy types."},
        {"generic-direction",
         "A direction is generic when it pairs nonzero with every isotropy weight and separates "
         "distinct moment images; its moment pairing is then a Morse-Bott function with critical "
         "set the torus-fixed points."},
        {"morse-halving",
         "Morse assembly: each fixed component contributes its series shifted by twice its index "
         "(the rank of the negative part of its normal bundle); the real locus assembles with "
         "half the shifts, and the two assembled series satisfy the halving identity."},
        {"xi-independence",
         "The assembled series describe the manifold itself, so they cannot depend on the choice "
         "of generic direction."},
        {"two-torsion",
         "A 2-torsion point carries an isotropy weight all of whose coordinates are even; such "
         "weights restrict trivially to the 2-torus and obstruct the reduction theory over the "
         "two-element field."},
        {"mt2",
         "The torus and its 2-torus have the same fixed set exactly when no nonzero isotropy "
         "weight is divisible by 2."},
        {"equivariant-halving",
         "The equivariant cohomology of the space for the torus and of the real locus for the "
         "2-torus are both free over their base rings (one geometric series factor per torus "
         "coordinate), and the degree-2m piece of the former matches the degree-m piece of the "
         "latter."},
        {"presentation-restrictions",
         "Each fixed-point restriction of an explicit equivariant presentation must be a "
         "well-defined map into that component's own equivariant cohomology."},
        {"presentation-injective",
         "The joint restriction of an equivariant presentation to all fixed components must be "
         "injective degreewise; this is the algebraic form of equivariant formality used by the "
         "kernel computation."},
        {"reduction-halving",
         "After reduction at a regular level, the even-degree series of the quotient should halve "
         "against the series of the real-locus reduction; the real side must be supplied "
         "independently, never derived."},
        {"wall",
         "The reduction level must avoid the walls: its pairing against every direction must "
         "differ from the pairings of all fixed components."},
    };
    return kCatalog;
}

} // namespace

std::optional<std::string> explain_check(std::string_view check_id) {
    // Ids carrying a witness suffix (degree:a, relation:3, stabilize:...)
    // explain by their family.
    std::string key(check_id);
    if (const auto colon = key.find(':'); colon != std::string::npos)
        key = key.substr(0, colon);
    if (key == "degree")
        key = "map-degrees";
    if (key == "relation")
        key = "map-relations";
    const auto it = catalog().find(key);
    if (it == catalog().end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> known_check_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : catalog())
        ids.push_back(k);
    return ids;
}

} // namespace conjtk
