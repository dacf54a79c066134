#include "conjcore/cells.hpp"
#include "conjcore/constructors.hpp"

#include <doctest.h>

using namespace conjtk;

TEST_CASE("cell-count series") {
    CellSpec cp3{{{0, 1}, {2, 1}, {4, 1}, {6, 1}}};
    const CellSeries s = poincare_series(cp3, 8);
    CHECK(s.space == Series({1, 0, 1, 0, 1, 0, 1}));
    CHECK(s.real_locus == Series({1, 1, 1, 1}));
    CHECK(Series::halving(s.space, s.real_locus, 8));

    const CellSeries empty = poincare_series(CellSpec{}, 6);
    CHECK(empty.space == Series::zero());
    CHECK(empty.real_locus == Series::zero());

    // Schubert cells of the 2-plane Grassmannian in C^4
    CellSpec gr{{{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}};
    const CellSeries g = poincare_series(gr, 10);
    CHECK(g.space == Series({1, 0, 1, 0, 2, 0, 1, 0, 1}));

    CHECK_THROWS_AS(poincare_series(CellSpec{{{3, 1}}}, 6), AlgebraError);
    CHECK_THROWS_AS(poincare_series(CellSpec{{{2, 0}}}, 6), AlgebraError);
}

TEST_CASE("halving is definitional for any cell spec") {
    // dimensions need not increase along the filtration
    CellSpec jumbled{{{4, 2}, {0, 1}, {8, 3}, {2, 5}, {4, 1}}};
    const CellSeries s = poincare_series(jumbled, 12);
    CHECK(Series::halving(s.space, s.real_locus, 12));
}

TEST_CASE("product complexes") {
    CellSpec cp1{{{0, 1}, {2, 1}}};
    const CellSpec prod = product_complex(cp1, cp1);
    const CellSeries s = poincare_series(prod, 6);
    CHECK(s.space == Series({1, 0, 2, 0, 1}));

    CellSpec pt{{{0, 1}}};
    const CellSpec with_pt = product_complex(cp1, pt);
    CHECK(poincare_series(with_pt, 4).space == poincare_series(cp1, 4).space);

    CellSpec cp2{{{0, 1}, {2, 1}, {4, 1}}};
    const CellSeries sp = poincare_series(product_complex(cp2, cp1), 8);
    CHECK(sp.space == convolve(Series({1, 0, 1, 0, 1}), Series({1, 0, 1}), 8));

    // ordering: lexicographic in (total dimension, first index)
    CHECK(prod.stages.size() == 4);
    CHECK(prod.stages[0].dim == 0);
    CHECK(prod.stages[1].dim == 2);
    CHECK(prod.stages[2].dim == 2);
    CHECK(prod.stages[3].dim == 4);
}

TEST_CASE("product complex series commute and associate") {
    CellSpec a{{{0, 1}, {2, 2}}};
    CellSpec b{{{0, 1}, {4, 1}}};
    CellSpec c{{{0, 2}, {2, 1}}};
    const int cutoff = 10;
    CHECK(poincare_series(product_complex(a, b), cutoff).space ==
          poincare_series(product_complex(b, a), cutoff).space);
    CHECK(poincare_series(product_complex(product_complex(a, b), c), cutoff).space ==
          poincare_series(product_complex(a, product_complex(b, c)), cutoff).space);
}

TEST_CASE("cell counts agree with the built-in frames") {
    struct Row {
        CellSpec cells;
        ConjugationFrame frame;
    };
    std::vector<Row> rows;
    rows.push_back({CellSpec{{{0, 1}, {2, 1}, {4, 1}}}, projective_frame(2, 10)});
    rows.push_back({CellSpec{{{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}},
                    grassmannian_frame(2, 4, 10)});
    rows.push_back({product_complex(CellSpec{{{0, 1}, {2, 1}}}, CellSpec{{{0, 1}, {2, 1}}}),
                    product_frame(projective_frame(1, 10), projective_frame(1, 10))});
    for (const Row& row : rows) {
        const CellSeries s = poincare_series(row.cells, row.frame.cutoff());
        CHECK(s.space == row.frame.even_ring().hilbert());
        CHECK(s.real_locus == row.frame.fixed_ring().hilbert());
    }
}

TEST_CASE("three-cell invariants") {
    const ThreeCellReport hopf = validate_three_cell({1, 2});
    CHECK(hopf.valid);
    CHECK(hopf.a_squared_coefficient == 1);
    CHECK(hopf.h1_order == 2);

    CHECK(distinct_types({0, 2}, {1, 2}));
    CHECK(!distinct_types({1, 2}, {1, 2}));

    const ThreeCellReport odd = validate_three_cell({1, 3});
    CHECK(!odd.valid);
    CHECK(!odd.report.all_pass());
}
