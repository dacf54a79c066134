#include "conjcore/algebra.hpp"
#include "conjcore/algebra_map.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace conjtk;

namespace {

GradedAlgebra truncated_poly(const std::string& name, int gen_degree, int power, int cutoff) {
    std::vector<int> exps{power};
    return GradedAlgebra::presented({{name, gen_degree}}, {Polynomial({Monomial(exps)})}, cutoff);
}

// Random normal-form element of bounded degree, built from basis monomials.
Polynomial random_element(const GradedAlgebra& ring, int max_degree, std::mt19937& rng) {
    std::vector<Monomial> monos;
    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& m : ring.basis(d))
            if (rng() % 4 == 0)
                monos.push_back(m);
    return Polynomial(std::move(monos));
}

// Partitions with at most `rows` parts, each part at most `cols`, of size n.
long long partitions_in_box(int rows, int cols, int n) {
    if (n == 0)
        return 1;
    long long count = 0;
    std::vector<int> part;
    std::function<void(int, int)> walk = [&](int remaining, int max_part) {
        if (remaining == 0) {
            ++count;
            return;
        }
        if (static_cast<int>(part.size()) == rows)
            return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            part.push_back(p);
            walk(remaining - p, p);
            part.pop_back();
        }
    };
    walk(n, cols);
    return count;
}

} // namespace

TEST_CASE("groebner: principal ideal is already reduced") {
    const GradedAlgebra ring = truncated_poly("a", 2, 3, 12);
    REQUIRE(ring.groebner_basis().size() == 1);
    CHECK(ring.format(ring.groebner_basis()[0]) == "a^3");
}

TEST_CASE("groebner: empty relation list gives the empty basis") {
    const GradedAlgebra ring = GradedAlgebra::free_algebra({{"x", 1}, {"y", 2}}, 10);
    CHECK(ring.groebner_basis().empty());
}

TEST_CASE("groebner: duality relations eliminate the complement classes degreewise") {
    // Hand expansion of the four graded components of (1+c1+c2)(1+cb1+cb2) = 1.
    const std::vector<Generator> gens{{"c1", 2}, {"c2", 4}, {"cb1", 2}, {"cb2", 4}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 16);
    const std::vector<Polynomial> rels{
        shell.parse("c1 + cb1"),
        shell.parse("c2 + c1*cb1 + cb2"),
        shell.parse("c1*cb2 + c2*cb1"),
        shell.parse("c2*cb2"),
    };
    const GradedAlgebra ring = GradedAlgebra::presented(gens, rels, 16);

    // Both complement generators acquire linear leading terms.
    CHECK(ring.format(ring.normal_form(ring.parse("cb1"))) == "c1");
    CHECK(ring.format(ring.normal_form(ring.parse("cb2"))) == "c2 + c1^2");
    // The pure-Chern consequences, derived by substituting by hand:
    // c1*cb2 + c2*cb1 = c1(c1^2+c2) + c2 c1 = c1^3, and
    // c2*cb2 = c2(c1^2+c2) = c1^2 c2 + c2^2.
    CHECK(ring.normal_form(ring.parse("c1^3")).is_zero());
    CHECK(ring.normal_form(ring.parse("c2^2 + c1^2*c2")).is_zero());
    for (const Polynomial& g : ring.groebner_basis()) {
        // every basis element has a lead that eliminates a cb or is pure-c
        const Monomial& lead = ring.leading(g);
        const bool cb_lead = lead.exps[2] > 0 || lead.exps[3] > 0;
        const bool pure_c_tailless = lead.exps[2] == 0 && lead.exps[3] == 0;
        CHECK((cb_lead || pure_c_tailless));
    }
}

TEST_CASE("normal form: spec examples") {
    const GradedAlgebra ring = truncated_poly("a", 2, 3, 12);
    CHECK(ring.normal_form(ring.parse("a^3")).is_zero());
    CHECK(ring.normal_form(ring.parse("a^2 + a^2")).is_zero()); // characteristic 2
    CHECK_THROWS_AS(ring.normal_form(ring.parse("a^7")), DegreeError);
}

TEST_CASE("normal form is idempotent on random input") {
    const std::vector<Generator> gens{{"c1", 2}, {"c2", 4}, {"cb1", 2}, {"cb2", 4}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 12);
    const GradedAlgebra ring = GradedAlgebra::presented(
        gens,
        {shell.parse("c1 + cb1"), shell.parse("c2 + c1*cb1 + cb2"),
         shell.parse("c1*cb2 + c2*cb1"), shell.parse("c2*cb2")},
        12);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        // random raw polynomial: mix basis monomials with reducible ones
        std::vector<Monomial> monos;
        for (int pick = 0; pick < 4; ++pick) {
            Monomial m(static_cast<std::size_t>(4));
            int deg = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                m.exps[i] = static_cast<int>(rng() % 3);
                deg += m.exps[i] * ring.weights()[i];
            }
            if (deg <= ring.cutoff())
                monos.push_back(std::move(m));
        }
        const Polynomial p{Polynomial(monos)};
        const Polynomial once = ring.normal_form(p);
        CHECK(ring.normal_form(once) == once);
    }
}

TEST_CASE("hilbert: truncated polynomial rings") {
    const GradedAlgebra ring = truncated_poly("a", 2, 3, 10);
    CHECK(ring.hilbert() == Series({1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}));
    const GradedAlgebra r2 = GradedAlgebra::free_algebra({{"u", 1}}, 6);
    CHECK(r2.hilbert() == Series({1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("hilbert: even ring of the 2-plane Grassmannian in C^4") {
    const std::vector<Generator> gens{{"c1", 2}, {"c2", 4}, {"cb1", 2}, {"cb2", 4}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 16);
    const GradedAlgebra ring = GradedAlgebra::presented(
        gens,
        {shell.parse("c1 + cb1"), shell.parse("c2 + c1*cb1 + cb2"),
         shell.parse("c1*cb2 + c2*cb1"), shell.parse("c2*cb2")},
        16);
    const Series h = ring.hilbert();
    // oracle: partitions inside a 2x2 box, graded by size
    for (int n = 0; n <= 8; ++n) {
        CHECK(h.at(2 * n) == partitions_in_box(2, 2, n));
        CHECK(h.at(2 * n + 1) == 0);
    }
}

TEST_CASE("tensor: series multiply") {
    const GradedAlgebra a = truncated_poly("a", 2, 2, 8);
    const GradedAlgebra b = truncated_poly("b", 2, 2, 8);
    const TensorResult t = tensor(a, b);
    CHECK(t.ring.hilbert() == Series({1, 0, 2, 0, 1, 0, 0, 0, 0}));

    // with the trivial algebra: unchanged
    const TensorResult tt = tensor(a, GradedAlgebra(8));
    CHECK(tt.ring.hilbert() == a.hilbert());

    // truncated free rings: convolution of the factors
    const GradedAlgebra f = GradedAlgebra::free_algebra({{"x", 2}}, 12);
    const TensorResult tf = tensor(f, f);
    CHECK(tf.ring.hilbert() == convolve(f.hilbert(), f.hilbert(), 12));
}

TEST_CASE("tensor renames colliding generators") {
    const GradedAlgebra a = truncated_poly("a", 2, 2, 8);
    const TensorResult t = tensor(a, a);
    CHECK(t.ring.generators()[0].name == "a");
    CHECK(t.ring.generators()[1].name == "a'");
}

TEST_CASE("hilbert additivity under tensor for built-in style rings") {
    std::vector<GradedAlgebra> rings;
    rings.push_back(truncated_poly("a", 2, 3, 12));
    rings.push_back(GradedAlgebra::free_algebra({{"x", 1}}, 12));
    rings.push_back(truncated_poly("s", 4, 2, 12));
    for (const auto& a : rings)
        for (const auto& b : rings) {
            const TensorResult t = tensor(a, b);
            CHECK(t.ring.hilbert() == convolve(a.hilbert(), b.hilbert(), t.ring.cutoff()));
        }
}

TEST_CASE("ring axioms on random elements") {
    const std::vector<Generator> gens{{"c1", 2}, {"c2", 4}, {"cb1", 2}, {"cb2", 4}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 16);
    const GradedAlgebra ring = GradedAlgebra::presented(
        gens,
        {shell.parse("c1 + cb1"), shell.parse("c2 + c1*cb1 + cb2"),
         shell.parse("c1*cb2 + c2*cb1"), shell.parse("c2*cb2")},
        16);
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_element(ring, 4, rng);
        const Polynomial q = random_element(ring, 4, rng);
        const Polynomial r = random_element(ring, 4, rng);
        CHECK(ring.mul(p, q) == ring.mul(q, p));
        CHECK(ring.mul(ring.mul(p, q), r) == ring.mul(p, ring.mul(q, r)));
        CHECK(ring.mul(p, ring.add(q, r)) == ring.add(ring.mul(p, q), ring.mul(p, r)));
        CHECK(ring.mul(p, ring.one()) == ring.normal_form(p));
        CHECK(ring.add(p, p).is_zero());
    }
}

TEST_CASE("squaring is additive in characteristic 2") {
    const std::vector<Generator> gens{{"c1", 2}, {"c2", 4}, {"cb1", 2}, {"cb2", 4}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 16);
    const GradedAlgebra ring = GradedAlgebra::presented(
        gens,
        {shell.parse("c1 + cb1"), shell.parse("c2 + c1*cb1 + cb2"),
         shell.parse("c1*cb2 + c2*cb1"), shell.parse("c2*cb2")},
        16);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_element(ring, 4, rng);
        const Polynomial q = random_element(ring, 4, rng);
        const Polynomial lhs = ring.pow(ring.add(p, q), 2);
        const Polynomial rhs = ring.add(ring.pow(p, 2), ring.pow(q, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("check_map: spec examples") {
    const GradedAlgebra A = truncated_poly("a", 2, 3, 12);
    const GradedAlgebra B = truncated_poly("b", 1, 3, 12);

    SUBCASE("the degree-halving isomorphism passes") {
        AlgebraMap f(A, B, DegreeScale::half, {B.gen(0)});
        CHECK(check_map(f).all_pass());
        CHECK(is_iso_up_to(f).iso);
    }
    SUBCASE("a quadratic image fails the degree check") {
        AlgebraMap f(A, B, DegreeScale::half, {B.pow(B.gen(0), 2)});
        const Report rep = check_map(f);
        CHECK(!rep.all_pass());
        CHECK(rep.find("map-degrees") != nullptr);
        CHECK(!rep.find("map-degrees")->pass);
    }
    SUBCASE("well-defined but not an isomorphism") {
        const GradedAlgebra B2 = truncated_poly("b", 1, 2, 12);
        AlgebraMap f(A, B2, DegreeScale::half, {B2.gen(0)});
        CHECK(check_map(f).all_pass()); // a^3 -> b^3 = 0
        const IsoResult iso = is_iso_up_to(f);
        CHECK(!iso.iso);
        CHECK(iso.first_fail_degree == 4); // dim A_4 = 1, dim B_2 = 0
    }
}

TEST_CASE("is_iso_up_to: identity map and projective towers") {
    const GradedAlgebra A = truncated_poly("a", 2, 9, 20);
    CHECK(is_iso_up_to(AlgebraMap::identity(A)).iso);
    for (int n = 1; n <= 8; ++n) {
        const GradedAlgebra An = truncated_poly("a", 2, n + 1, 20);
        const GradedAlgebra Bn = truncated_poly("b", 1, n + 1, 20);
        CHECK(is_iso_up_to(AlgebraMap(An, Bn, DegreeScale::half, {Bn.gen(0)})).iso);
    }
}

TEST_CASE("composition of well-defined maps is well defined") {
    std::mt19937 rng(5);
    const GradedAlgebra A = truncated_poly("a", 2, 4, 16);
    const GradedAlgebra B = truncated_poly("b", 2, 4, 16);
    const GradedAlgebra C = GradedAlgebra::presented({{"x", 2}, {"y", 2}},
                                                     {Polynomial({Monomial({4, 0})})}, 16);
    for (int trial = 0; trial < 50; ++trial) {
        // f: A -> B sends a to a random degree-2 class; g: B -> C likewise.
        const Polynomial fb = random_element(B, 2, rng);
        const Polynomial gc = random_element(C, 2, rng);
        const AlgebraMap f(A, B, DegreeScale::full, {B.component(fb, 2)});
        const AlgebraMap g(B, C, DegreeScale::full, {C.component(gc, 2)});
        if (check_map(f).all_pass() && check_map(g).all_pass())
            CHECK(check_map(compose(g, f)).all_pass());
    }
}

TEST_CASE("parser round trips and rejects garbage") {
    const GradedAlgebra ring = GradedAlgebra::free_algebra({{"c1", 2}, {"cb1", 2}, {"c2", 4}}, 16);
    const Polynomial p = ring.parse("c1*cb1 + c2 + cb1^2");
    CHECK(ring.parse(ring.format(p)) == p);
    CHECK(ring.parse("0").is_zero());
    CHECK(ring.parse("1") == ring.one());
    CHECK(ring.parse("") == ring.zero());
    CHECK_THROWS_AS(ring.parse("q7"), ParseError);
    CHECK_THROWS_AS(ring.parse("c1 +"), ParseError);
    CHECK_THROWS_AS(ring.parse("2*c1"), ParseError);
}

TEST_CASE("homogeneity is enforced on relations") {
    GradedAlgebra shell = GradedAlgebra::free_algebra({{"a", 2}, {"b", 4}}, 12);
    CHECK_THROWS_AS(GradedAlgebra::presented({{"a", 2}, {"b", 4}}, {shell.parse("a + b")}, 12),
                    AlgebraError);
}

TEST_CASE("groebner resource budget raises the overflow signal") {
    // A deliberately tiny budget trips on an ideal with a genuine critical
    // pair (the leads share a variable, so the pair is not discarded).
    const std::vector<Generator> gens{{"x", 1}, {"y", 1}};
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, 8);
    AlgebraOptions opts;
    opts.reduction_limit = 0;
    CHECK_THROWS_AS(GradedAlgebra::presented(gens,
                                             {shell.parse("x^2 + x*y"), shell.parse("x^2")}, 8,
                                             opts),
                    CutoffError);
    // the same ideal computes fine under the default budget
    CHECK_NOTHROW(GradedAlgebra::presented(gens,
                                           {shell.parse("x^2 + x*y"), shell.parse("x^2")}, 8));
}
