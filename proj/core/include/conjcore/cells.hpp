#pragma once

#include "conjcore/report.hpp"
#include "conjcore/series.hpp"

#include <cstdint>
#include <vector>

namespace conjtk {

/// One attachment stage: a collection of `count` conjugation cells of even
/// dimension `dim`.
struct CellStage {
    int dim = 0;
    std::int64_t count = 0;

    friend bool operator==(const CellStage& a, const CellStage& b) {
        return a.dim == b.dim && a.count == b.count;
    }
};

/// Ordered stages of a spherical complex. Dimensions need not increase along
/// the filtration.
struct CellSpec {
    std::vector<CellStage> stages;
};

struct CellSeries {
    Series space;      // one t^dim per cell
    Series real_locus; // one t^(dim/2) per cell
};

/// Cell-count Poincaré series of the complex and its real locus; the halving
/// identity holds by construction. Odd dimensions and nonpositive counts are
/// rejected.
CellSeries poincare_series(const CellSpec& spec, int cutoff);

/// Product complex: stage per pair, ordered by (total dimension, first
/// index, second index); counts multiply.
CellSpec product_complex(const CellSpec& a, const CellSpec& b);

/// The integer pair classifying a three-cell complex with cells in
/// dimensions 0, 2 and 4 by its attaching map.
struct ThreeCellInvariant {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

struct ThreeCellReport {
    bool valid = false;
    Report report;
    std::int64_t a_squared_coefficient = 0; // a^2 = (p mod 2) * b in the mod-2 ring
    std::int64_t h1_order = 0;              // first integral cohomology of the real locus is Z_q
};

/// Rejects odd q and records the derived ring and torsion facts.
ThreeCellReport validate_three_cell(const ThreeCellInvariant& inv);

/// Distinct invariants certify distinct equivariant homotopy types.
bool distinct_types(const ThreeCellInvariant& a, const ThreeCellInvariant& b);

} // namespace conjtk
