#include "conjcore/cells.hpp"

#include "conjcore/algebra.hpp"

#include <algorithm>
#include <tuple>

namespace conjtk {

CellSeries poincare_series(const CellSpec& spec, int cutoff) {
    CellSeries out;
    for (const CellStage& st : spec.stages) {
        if (st.dim < 0 || st.dim % 2)
            throw AlgebraError("cell dimension must be even and nonnegative, got " +
                               std::to_string(st.dim));
        if (st.count <= 0)
            throw AlgebraError("cell count must be positive");
        if (st.dim <= cutoff)
            out.space.set(st.dim, out.space.at(st.dim) + st.count);
        if (st.dim / 2 <= cutoff)
            out.real_locus.set(st.dim / 2, out.real_locus.at(st.dim / 2) + st.count);
    }
    out.space = out.space.truncated(cutoff);
    out.real_locus = out.real_locus.truncated(cutoff);
    return out;
}

CellSpec product_complex(const CellSpec& a, const CellSpec& b) {
    struct Entry {
        int dim;
        std::size_t i, j;
        std::int64_t count;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < a.stages.size(); ++i)
        for (std::size_t j = 0; j < b.stages.size(); ++j)
            entries.push_back({a.stages[i].dim + b.stages[j].dim, i, j,
                               a.stages[i].count * b.stages[j].count});
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return std::tie(x.dim, x.i, x.j) < std::tie(y.dim, y.i, y.j);
    });
    CellSpec out;
    for (const Entry& e : entries)
        out.stages.push_back({e.dim, e.count});
    return out;
}

ThreeCellReport validate_three_cell(const ThreeCellInvariant& inv) {
    ThreeCellReport out;
    const bool q_even = inv.q % 2 == 0;
    out.report.add("three-cell-q-even", q_even,
                   q_even ? "" : "q = " + std::to_string(inv.q) + " is odd");
    out.valid = q_even;
    if (q_even) {
        out.a_squared_coefficient = ((inv.p % 2) + 2) % 2;
        out.h1_order = inv.q;
        out.report.add("three-cell-ring", true,
                       "a^2 = " + std::to_string(out.a_squared_coefficient) + "*b");
        out.report.add("three-cell-torsion", true,
                       "integral H^1 of the real locus has order " + std::to_string(inv.q));
    }
    return out;
}

bool distinct_types(const ThreeCellInvariant& a, const ThreeCellInvariant& b) {
    return a.p != b.p || a.q != b.q;
}

} // namespace conjtk
