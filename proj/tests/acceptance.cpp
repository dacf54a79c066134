// Acceptance suite: one pass/fail line per criterion. All arithmetic is over
// the two-element field; every comparison is exact.

#include "conjcore/constructors.hpp"
#include "conjcore/gf2.hpp"
#include "conjcore/hamiltonian.hpp"
#include "conjcore/serialize.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace conjtk;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    double budget_seconds = 0; // 0 = no budget
};

// Base-2 digit comparison: C(k,i) is odd iff every binary digit of i is at
// most the corresponding digit of k.
bool binomial_odd_lucas(int k, int i) {
    while (k > 0 || i > 0) {
        if (i % 2 > k % 2)
            return false;
        k /= 2;
        i /= 2;
    }
    return true;
}

bool criterion_golden_formulas(std::string& detail) {
    bool ok = true;
    for (int n = 6; n <= 8; ++n) {
        const ConjugationFrame cp = projective_frame(n, 24);
        const std::string r2 = restrict_class(cp, cp.even_ring().parse("a^2")).str();
        const std::string r3 = restrict_class(cp, cp.even_ring().parse("a^3")).str();
        if (r2 != "b^2*u^2 + b^4" || r3 != "b^3*u^3 + b^4*u^2 + b^5*u + b^6") {
            ok = false;
            detail = "n=" + std::to_string(n) + ": got " + r2 + " and " + r3;
            break;
        }
    }
    if (ok)
        detail = "restrict(a^2) and restrict(a^3) match the printed formulas for n = 6..8";
    return ok;
}

bool criterion_lucas(std::string& detail) {
    const ConjugationFrame cpi = projective_frame(kInfinite, 40);
    const GradedAlgebra& B = cpi.fixed_ring();
    for (int k = 1; k <= 16; ++k) {
        Monomial ak(1);
        ak.exps[0] = k;
        const UPoly r = restrict_class(cpi, Polynomial({ak}));
        if (r.u_degree() > k) {
            detail = "k=" + std::to_string(k) + ": u-degree above k";
            return false;
        }
        for (int i = 0; i <= k; ++i) {
            Monomial bm(1);
            bm.exps[0] = 2 * k - i;
            const Polynomial want =
                binomial_odd_lucas(k, i) ? Polynomial({bm}) : Polynomial();
            if (!(r.coeff(i) == want)) {
                detail = "k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                         ": coefficient disagrees with the Lucas oracle";
                return false;
            }
        }
    }
    detail = "binomial parity pattern verified for k = 1..16 at cutoff 40";
    return true;
}

bool criterion_blanket_suite(std::string& detail) {
    std::vector<std::pair<std::string, ConjugationFrame>> catalog;
    catalog.emplace_back("point", point_frame(24));
    for (int k = 1; k <= 4; ++k)
        catalog.emplace_back("sphere-" + std::to_string(2 * k), sphere_frame(k, 24));
    for (int n = 1; n <= 8; ++n)
        catalog.emplace_back("cp" + std::to_string(n), projective_frame(n, 18));
    for (int r = 1; r <= 3; ++r)
        catalog.emplace_back("bt" + std::to_string(r), bt_frame(r, r < 3 ? 14 : 12));
    catalog.emplace_back("gr(2,4)", grassmannian_frame(2, 4, 16));
    catalog.emplace_back("gr(2,5)", grassmannian_frame(2, 5, 14));
    catalog.emplace_back("gr(3,6)", grassmannian_frame(3, 6, 18));
    catalog.emplace_back("cp1*cp1",
                         product_frame(projective_frame(1, 12), projective_frame(1, 12)));
    catalog.emplace_back("cp2*cp1",
                         product_frame(projective_frame(2, 12), projective_frame(1, 12)));
    catalog.emplace_back("cp2#cp2",
                         connected_sum_frame(projective_frame(2, 12), projective_frame(2, 12), 4,
                                             true));
    catalog.emplace_back(
        "toric-square",
        toric_frame({2,
                     {"F1", "F2", "F3", "F4"},
                     {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
                    12));
    catalog.emplace_back(
        "toric-simplex",
        toric_frame({2, {"F1", "F2", "F3"}, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}},
                    12));
    {
        const ConjugationFrame cp1 = projective_frame(1, 12);
        const TauBundle hopf(cp1, 1, {cp1.even_ring().gen(0)});
        const TauBundle line(cp1, 1, {Polynomial()});
        catalog.emplace_back("p(hopf+1)/cp1", projective_bundle_frame(whitney_sum(hopf, line)));
        const ConjugationFrame pt = point_frame(12);
        catalog.emplace_back("p(triv2)/pt",
                             projective_bundle_frame(TauBundle(pt, 2, {Polynomial(), Polynomial()})));
        const ConjugationFrame cp2 = projective_frame(2, 10);
        catalog.emplace_back("thom(hopf)/cp2",
                             thom_space_frame(TauBundle(cp2, 1, {cp2.even_ring().gen(0)})));
        const ConjugationFrame s2 = sphere_frame(1, 10);
        catalog.emplace_back("thom(triv2)/s2",
                             thom_space_frame(TauBundle(s2, 2, {Polynomial(), Polynomial()})));
    }

    if (catalog.size() < 20) {
        detail = "catalog has only " + std::to_string(catalog.size()) + " frames";
        return false;
    }
    for (const auto& [name, frame] : catalog) {
        if (!verify_frame(frame).all_pass()) {
            detail = name + " fails the axiom suite";
            return false;
        }
        if (!check_injectivity_r(frame).injective) {
            detail = name + " fails the injectivity scan";
            return false;
        }
        if (!halving_series(frame).halves) {
            detail = name + " fails the halving identity";
            return false;
        }
    }
    detail = std::to_string(catalog.size()) +
             " frames pass verify_frame, check_injectivity_r and halving_series";
    return true;
}

bool criterion_grassmannian_identification(std::string& detail) {
    for (int n = 2; n <= 8; ++n)
        if (canonical_json(grassmannian_frame(1, n, 16)) !=
            canonical_json(projective_frame(n - 1, 16))) {
            detail = "n=" + std::to_string(n) + ": serializations differ";
            return false;
        }
    detail = "canonical serializations coincide for n = 2..8";
    return true;
}

bool criterion_thom_ladder(std::string& detail) {
    for (int n = 2; n <= 6; ++n) {
        const ConjugationFrame base = projective_frame(n - 1, 2 * n);
        const ConjugationFrame thom =
            thom_space_frame(TauBundle(base, 1, {base.even_ring().gen(0)}));
        const ConjugationFrame cpn = projective_frame(n, 2 * n);
        std::vector<Polynomial> even_images, fixed_images;
        for (int j = 0; j < n; ++j) {
            Monomial a(1), b(1);
            a.exps[0] = j + 1;
            b.exps[0] = j + 1;
            even_images.push_back(Polynomial({a}));
            fixed_images.push_back(cpn.fixed_ring().normal_form(Polynomial({b})));
        }
        const AlgebraMap even_map(thom.even_ring(), cpn.even_ring(), DegreeScale::full,
                                  even_images);
        const AlgebraMap fixed_map(thom.fixed_ring(), cpn.fixed_ring(), DegreeScale::full,
                                   fixed_images);
        if (!check_map(even_map).all_pass() || !check_map(fixed_map).all_pass()) {
            detail = "n=" + std::to_string(n) + ": ladder map not well defined";
            return false;
        }
        if (!is_iso_up_to(even_map).iso || !is_iso_up_to(fixed_map).iso) {
            detail = "n=" + std::to_string(n) + ": ladder map not bijective";
            return false;
        }
        if (!verify_naturality(FrameMorphism(thom, cpn, even_map, fixed_map)).all_pass()) {
            detail = "n=" + std::to_string(n) + ": restriction data disagrees";
            return false;
        }
    }
    detail = "Thom space of the tautological line bundle matches the next projective space, "
             "n = 2..6";
    return true;
}

bool criterion_localization(std::string& detail) {
    const LocalizeResult r = localize_check(projective_frame(kInfinite, 24));
    if (r.fiber_values.size() != 1 || r.fiber_values[0] != 0) {
        detail = "evaluation at u=1, b=1 is not zero";
        return false;
    }
    detail = "restriction of the generator evaluates to 0 at u = b = 1";
    return true;
}

bool criterion_naturality(std::string& detail) {
    for (int k = 1; k <= 7; ++k)
        for (int n = k + 1; n <= 8; ++n) {
            const ConjugationFrame big = projective_frame(n, 18);
            const ConjugationFrame small = projective_frame(k, 18);
            const FrameMorphism m(
                big, small,
                AlgebraMap(big.even_ring(), small.even_ring(), DegreeScale::full,
                           {small.even_ring().gen(0)}),
                AlgebraMap(big.fixed_ring(), small.fixed_ring(), DegreeScale::full,
                           {small.fixed_ring().gen(0)}));
            if (!verify_naturality(m).all_pass()) {
                detail = "inclusion k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                         " fails naturality";
                return false;
            }
        }
    const ConjugationFrame cp2 = projective_frame(2, 12);
    const FrameMorphism corrupted(
        cp2, cp2,
        AlgebraMap(cp2.even_ring(), cp2.even_ring(), DegreeScale::full, {cp2.even_ring().zero()}),
        AlgebraMap::identity(cp2.fixed_ring()));
    const Report rep = verify_naturality(corrupted);
    const CheckResult* k = rep.find("naturality-kappa");
    if (k == nullptr || k->pass || k->witness.find("degree 2") == std::string::npos) {
        detail = "corrupted morphism did not fail with a degree-2 witness";
        return false;
    }
    detail = "all projective inclusions natural; zero map rejected with a degree-2 witness";
    return true;
}

bool criterion_morse(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        HamiltonianData data;
        data.rank = 1;
        for (int j = 0; j <= n; ++j) {
            FixedComponent fc{"p" + std::to_string(j), point_frame(2 * n), {Rational(j)}, {}};
            for (int i = 0; i <= n; ++i)
                if (i != j)
                    fc.weights.push_back({{static_cast<long long>(i - j)}, 1});
            data.components.push_back(std::move(fc));
        }
        const MorseSeriesResult r = morse_series(data, {1}, 2 * n);
        if (!(r.total == Series::geometric(2, 2 * n))) {
            detail = "n=" + std::to_string(n) + ": assembled series wrong";
            return false;
        }
        if (!(r.real_locus.truncated(n) == Series::geometric(1, n))) {
            detail = "n=" + std::to_string(n) + ": real-locus series wrong";
            return false;
        }
        if (!r.halves) {
            detail = "n=" + std::to_string(n) + ": halving verdict false";
            return false;
        }
        if (!xi_independence(data, {1}, {-1}, 2 * n)) {
            detail = "n=" + std::to_string(n) + ": series depend on the direction";
            return false;
        }
    }
    detail = "projective-space data assembles to 1+t^2+...+t^(2n) with direction independence, "
             "n = 1..6";
    return true;
}

bool criterion_two_torsion(std::string& detail) {
    HamiltonianData doubled;
    doubled.rank = 1;
    doubled.components.push_back({"F", point_frame(8), {Rational(0)}, {{{2}, 1}}});
    if (two_torsion_scan(doubled).size() != 1 || mt2_check(doubled)) {
        detail = "the weight-2 circle datum was not flagged";
        return false;
    }
    HamiltonianData square;
    square.rank = 2;
    const int corners[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (const auto& c : corners) {
        FixedComponent fc{"v", point_frame(8), {Rational(c[0]), Rational(c[1])}, {}};
        fc.weights.push_back({{c[0] ? -1LL : 1LL, 0}, 1});
        fc.weights.push_back({{0, c[1] ? -1LL : 1LL}, 1});
        square.components.push_back(std::move(fc));
    }
    if (!mt2_check(square)) {
        detail = "the toric square datum was wrongly flagged";
        return false;
    }
    detail = "weight 2 flagged (fixed sets differ); toric square clean (fixed sets agree)";
    return true;
}

bool criterion_tw_kernel(std::string& detail) {
    const int cutoff = 12;
    GradedAlgebra shell = GradedAlgebra::free_algebra({{"a", 2}, {"t", 2}}, cutoff);
    const GradedAlgebra alg =
        GradedAlgebra::presented({{"a", 2}, {"t", 2}}, {shell.parse("a^3 + a*t^2")}, cutoff);
    const GradedAlgebra point_ring = GradedAlgebra::free_algebra({{"t", 2}}, cutoff);
    GradedAlgebra line_shell = GradedAlgebra::free_algebra({{"h", 2}, {"t", 2}}, cutoff);
    const GradedAlgebra line_ring =
        GradedAlgebra::presented({{"h", 2}, {"t", 2}}, {line_shell.parse("h^2")}, cutoff);
    EquivariantPresentation pres{alg, 1, {}};
    pres.restrictions.push_back(
        {"p0", {Rational(0)},
         AlgebraMap(alg, point_ring, DegreeScale::full, {point_ring.zero(), point_ring.gen(0)})});
    pres.restrictions.push_back(
        {"F1", {Rational(1)},
         AlgebraMap(alg, line_ring, DegreeScale::full,
                    {line_ring.parse("h + t"), line_ring.gen(1)})});

    const TwKernelResult r = tw_kernel(pres, {{1}, {-1}}, {Rational(1, 2)}, Series({1, 1}));
    if (!(r.reduced == Series({1, 0, 1}))) {
        detail = "reduced series is " + r.reduced.str() + ", expected [1,0,1]";
        return false;
    }
    if (r.halving_verdict != 1) {
        detail = "halving verdict against the real reduction is not true";
        return false;
    }
    // independent oracle: degreewise row reduction of the ideal (a, (a+t)^2)
    for (int d = 0; d <= cutoff; ++d) {
        Gf2Span span(alg.basis(d).size());
        std::int64_t dim = 0;
        for (const Polynomial& g : {alg.parse("a"), alg.parse("a^2 + t^2")}) {
            if (alg.degree(g) > d)
                continue;
            for (const Monomial& m : alg.basis(d - alg.degree(g))) {
                const Polynomial prod = alg.mul(g, Polynomial({m}));
                if (!prod.is_zero() && span.insert_support(alg.coords(prod, d)))
                    ++dim;
            }
        }
        if (r.kernel.at(d) != dim) {
            detail = "kernel dimension in degree " + std::to_string(d) +
                     " differs from the ideal (a, (a+t)^2)";
            return false;
        }
        for (const Polynomial& k : r.kernel_basis[d])
            if (!span.contains_support(alg.coords(k, d))) {
                detail = "kernel element outside the ideal (a, (a+t)^2) in degree " +
                         std::to_string(d);
                return false;
            }
    }
    detail = "kernel ideal equals (a, (a+t)^2); reduced series 1 + t^2";
    return true;
}

bool criterion_negative_tests(std::string& detail) {
    // (i) wrong fixed-ring dimension
    {
        const GradedAlgebra A =
            GradedAlgebra::presented({{"a", 2}}, {Polynomial({Monomial({3})})}, 12);
        const GradedAlgebra B =
            GradedAlgebra::presented({{"b", 1}}, {Polynomial({Monomial({2})})}, 12);
        std::vector<Polynomial> coeffs(3);
        coeffs[1] = B.gen(0);
        const ConjugationFrame broken(A, B, AlgebraMap(A, B, DegreeScale::half, {B.gen(0)}),
                                      {UPoly(B, 2, coeffs)});
        const Report rep = verify_frame(broken);
        const CheckResult* iso = rep.find("kappa-iso");
        if (iso == nullptr || iso->pass || iso->witness.find("degree 4") == std::string::npos) {
            detail = "dimension mismatch not rejected with its first failing degree";
            return false;
        }
    }
    // (ii) degree-violating kappa
    {
        const ConjugationFrame cp3 = projective_frame(3, 12);
        const GradedAlgebra& B = cp3.fixed_ring();
        const ConjugationFrame broken(cp3.even_ring(), B,
                                      AlgebraMap(cp3.even_ring(), B, DegreeScale::half,
                                                 {B.parse("b^2")}),
                                      {cp3.rsigma(0)});
        const Report rep = verify_frame(broken);
        const CheckResult* wd = rep.find("kappa-well-defined");
        if (wd == nullptr || wd->pass || wd->witness.find("a") == std::string::npos) {
            detail = "degree-violating kappa not rejected with a generator witness";
            return false;
        }
    }
    // (iii) restriction data breaking a relation
    {
        const ConjugationFrame gr = grassmannian_frame(2, 4, 16);
        std::vector<UPoly> rsigma;
        for (std::size_t i = 0; i < gr.even_ring().ngens(); ++i)
            rsigma.push_back(gr.rsigma(i));
        std::vector<Polynomial> coeffs(5);
        coeffs[2] = gr.fixed_ring().parse("w2");
        coeffs[0] = gr.fixed_ring().parse("w2^2");
        rsigma[1] = UPoly(gr.fixed_ring(), 4, coeffs);
        const ConjugationFrame broken(gr.even_ring(), gr.fixed_ring(), gr.kappa(), rsigma);
        const Report rep = verify_frame(broken);
        const CheckResult* rel = rep.find("rsigma-relations");
        if (rel == nullptr || rel->pass || rel->witness.find("restricts to") == std::string::npos) {
            detail = "relation-breaking restriction data not rejected with a relation witness";
            return false;
        }
    }
    detail = "all three corrupted frames rejected with correct first witnesses";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 projective golden formulas", criterion_golden_formulas, 1.0},
        {"2 binomial parity pattern (cutoff 40)", criterion_lucas, 5.0},
        {"3 blanket axiom suite (>= 20 frames)", criterion_blanket_suite, 60.0},
        {"4 line Grassmannians are projective spaces", criterion_grassmannian_identification, 0},
        {"5 Thom ladder of the tautological bundle", criterion_thom_ladder, 0},
        {"6 localization counterexample at u=b=1", criterion_localization, 0},
        {"7 naturality of projective inclusions", criterion_naturality, 0},
        {"8 Morse assembly of projective spaces", criterion_morse, 0},
        {"9 two-torsion diagnostics", criterion_two_torsion, 0},
        {"10 reduction kernel at a regular level", criterion_tw_kernel, 1.0},
        {"11 negative tests with witnesses", criterion_negative_tests, 0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            detail = "over time budget";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  criterion " << c.name << "  [";
        line.precision(2);
        line << std::fixed << seconds << "s]  " << detail;
        std::cout << line.str() << "\n";
        if (!ok)
            ++failures;
    }
    std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) + " criteria)"
                           : "ACCEPTANCE: PASS")
              << "\n";
    return failures ? 1 : 0;
}
