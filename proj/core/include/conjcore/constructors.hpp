#pragma once

#include "conjcore/bundles.hpp"
#include "conjcore/cells.hpp"
#include "conjcore/frame.hpp"

#include <functional>
#include <string>

namespace conjtk {

/// Marker for colimit objects (CP^infinity, BT, Gr(k, infinity)); these
/// always materialize as truncations at explicit cutoffs.
inline constexpr int kInfinite = -1;

ConjugationFrame point_frame(int cutoff = 24);

/// Even sphere of dimension 2k with half-dimensional real locus; the
/// restriction is exactly b*u^k.
ConjugationFrame sphere_frame(int k, int cutoff = 24);

/// Complex projective space (n = kInfinite for the colimit). The generator
/// restricts to b*u + b^2.
ConjugationFrame projective_frame(int n, int cutoff = 24);

/// Classifying space of a rank-r torus: r-fold product of projective_frame
/// at infinity.
ConjugationFrame bt_frame(int r, int cutoff = 24);

/// Product frame: tensor rings, tensor kappa, factorwise restriction data.
ConjugationFrame product_frame(const ConjugationFrame& f, const ConjugationFrame& g);

/// Complex Grassmannian of k-planes in n-space (n = kInfinite for the
/// colimit): Chern generators on both tautological and complement sides,
/// relations from c*cbar = 1, restriction data from the splitting principle.
ConjugationFrame grassmannian_frame(int k, int n, int cutoff = 24);

/// Connected sum of two Poincaré-like frames of formal dimension 2k: middle
/// degrees add, units and top classes are identified, cross products vanish.
/// `closed_manifold_attested` records the caller's duty: the inputs must come
/// from closed manifolds.
ConjugationFrame connected_sum_frame(const ConjugationFrame& f, const ConjugationFrame& g,
                                     int dimension, bool closed_manifold_attested);

/// Simple polytope with integer facet labels, the combinatorial input of the
/// torus-manifold quotient construction.
struct ToricPolytope {
    int dim = 0;
    std::vector<std::string> facets;
    std::vector<std::vector<long long>> labels; // one integer vector per facet
    std::vector<std::vector<int>> vertices;     // each = the dim facets meeting there
};

/// Face ring modulo the mod-2 linear system of the labels; every facet class
/// restricts by the line-bundle rule. Rejects non-smooth label data (a vertex
/// whose label matrix has |det| != 1).
ConjugationFrame toric_frame(const ToricPolytope& p, int cutoff = 24);

/// Cutoff-indexed family of frames for colimit objects.
struct FrameFamily {
    std::string name;
    std::function<ConjugationFrame(int cutoff)> build;
};

/// Builds the family at each cutoff and checks that all frame data agree on
/// common degrees; inconsistencies are reported with witnesses.
Report stabilize(const FrameFamily& family, const std::vector<int>& cutoffs);

struct FiberSeriesResult {
    Series total;
    Series total_real;
    bool halves = false;
};

/// Series-level total space of a fiber bundle over a cell-complex base:
/// series multiply on both the space and real-locus sides.
FiberSeriesResult fiber_bundle_series(const CellSpec& base, const ConjugationFrame& fiber,
                                      int cutoff);

} // namespace conjtk
