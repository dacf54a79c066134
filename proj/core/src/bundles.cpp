#include "conjcore/bundles.hpp"

#include "conjcore/gf2.hpp"

#include <map>
#include <set>
#include <sstream>

namespace conjtk {

TauBundle::TauBundle(ConjugationFrame base, int rank, std::vector<Polynomial> chern)
    : base_(std::move(base)), rank_(rank), chern_(std::move(chern)) {
    if (rank_ < 0)
        throw AlgebraError("bundle rank must be nonnegative");
    if (static_cast<int>(chern_.size()) != rank_)
        throw AlgebraError("expected one Chern class per rank");
    const GradedAlgebra& A = base_.even_ring();
    for (int i = 1; i <= rank_; ++i) {
        Polynomial& c = chern_[i - 1];
        c = A.normal_form(std::move(c));
        if (c.is_zero())
            continue;
        if (!A.is_homogeneous(c) || A.degree(c) != 2 * i)
            throw AlgebraError("c_" + std::to_string(i) + " = " + A.format(c) +
                               " is not homogeneous of degree " + std::to_string(2 * i));
    }
}

Polynomial TauBundle::chern_class(int i) const {
    if (i == 0)
        return base_.even_ring().one();
    if (i < 1 || i > rank_)
        return Polynomial();
    return chern_[i - 1];
}

Polynomial TauBundle::total_chern() const {
    Polynomial t = base_.even_ring().one();
    for (int i = 1; i <= rank_; ++i)
        t = poly_add(t, chern_[i - 1]);
    return t;
}

Polynomial TauBundle::sw_class(int i) const {
    return base_.fixed_ring().normal_form(base_.kappa().apply(chern_class(i)));
}

Polynomial TauBundle::total_sw() const {
    Polynomial t = base_.fixed_ring().zero();
    for (int i = 0; i <= rank_; ++i)
        t = poly_add(t, sw_class(i));
    return t;
}

TauBundle whitney_sum(const TauBundle& a, const TauBundle& b) {
    if (!a.base().even_ring().same_presentation(b.base().even_ring()))
        throw AlgebraError("whitney_sum: bundles live over different frames");
    const GradedAlgebra& A = a.base().even_ring();
    const int rank = a.rank() + b.rank();
    if (2 * rank > A.cutoff())
        throw DegreeError("whitney_sum: top Chern class above the cutoff");
    std::vector<Polynomial> chern;
    for (int i = 1; i <= rank; ++i) {
        Polynomial ci = A.zero();
        for (int s = 0; s <= i; ++s)
            ci = A.add(ci, A.mul(a.chern_class(s), b.chern_class(i - s)));
        chern.push_back(std::move(ci));
    }
    return TauBundle(a.base(), rank, std::move(chern));
}

bool euler_check(const TauBundle& b) {
    const GradedAlgebra& B = b.base().fixed_ring();
    const Polynomial lhs = b.sw_class(b.rank());
    const Polynomial rhs = B.component(B.normal_form(b.total_sw()), b.rank());
    return lhs == rhs;
}

Report chern_sw_check(const TauBundle& b) {
    Report rep;
    const GradedAlgebra& B = b.base().fixed_ring();

    bool degrees_ok = true;
    std::string witness;
    for (int i = 1; i <= b.rank(); ++i) {
        const Polynomial w = b.sw_class(i);
        if (!w.is_zero() && B.degree(w) != i) {
            degrees_ok = false;
            witness = "w_" + std::to_string(i) + " has degree " + std::to_string(B.degree(w));
            break;
        }
    }
    rep.add("chern-sw-degrees", degrees_ok, witness);

    const Polynomial total = B.normal_form(b.base().kappa().apply(b.total_chern()));
    const Polynomial sum = B.normal_form(b.total_sw());
    rep.add("chern-sw-total", total == sum,
            total == sum ? "" : "kappa(c) = " + B.format(total) + " but w = " + B.format(sum));
    return rep;
}

FrameModule thom_frame(const TauBundle& b) {
    const GradedAlgebra& B = b.base().fixed_ring();
    const int r = b.rank();
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j)
        coeffs[r - j] = b.sw_class(j); // u^(r-j) coefficient w_j
    return FrameModule(b.base(), r, UPoly(B, r, std::move(coeffs)), b.euler());
}

namespace {

// Expresses a homogeneous fixed-ring element of degree e over the images
// kappa(m'), m' running through the even basis in degree 2e.
std::vector<std::size_t> solve_over_kappa_basis(const ConjugationFrame& F, const Polynomial& delta,
                                                int e) {
    const GradedAlgebra& A = F.even_ring();
    const GradedAlgebra& B = F.fixed_ring();
    if (2 * e > A.cutoff())
        throw CutoffError("thom_space_frame: cutoff insufficient for the degree shift");
    const auto& abasis = A.basis(2 * e);
    Gf2Matrix m(abasis.size(), B.basis(e).size());
    for (std::size_t row = 0; row < abasis.size(); ++row) {
        const Polynomial im = B.normal_form(F.kappa().apply(Polynomial({abasis[row]})));
        for (std::size_t c : B.coords(im, e))
            m.set(row, c);
    }
    const auto solution = solve_left(m, B.coords(delta, e));
    if (!solution)
        throw AlgebraError("thom_space_frame: fixed-ring class not in the image of kappa");
    return *solution;
}

} // namespace

ConjugationFrame thom_space_frame(const TauBundle& b) {
    const ConjugationFrame& F = b.base();
    const GradedAlgebra& A = F.even_ring();
    const GradedAlgebra& B = F.fixed_ring();
    const int r = b.rank();
    const int cutoff = F.cutoff();
    if (2 * r > cutoff)
        throw CutoffError("thom_space_frame: cutoff insufficient for the degree shift");

    const FrameModule mod = thom_frame(b);

    // One generator per even basis element of the base, shifted by 2r.
    struct GenInfo {
        int base_degree;
        std::size_t basis_index;
        Monomial monomial;
    };
    std::vector<GenInfo> info;
    std::map<std::pair<int, std::size_t>, std::size_t> index_of;
    for (int d = 0; d + 2 * r <= cutoff; d += 2)
        for (std::size_t i = 0; i < A.basis(d).size(); ++i) {
            index_of[{d, i}] = info.size();
            info.push_back({d, i, A.basis(d)[i]});
        }

    std::vector<Generator> even_gens, fixed_gens;
    for (std::size_t g = 0; g < info.size(); ++g) {
        even_gens.push_back({"T" + std::to_string(g), 2 * r + info[g].base_degree});
        fixed_gens.push_back({"t" + std::to_string(g), r + info[g].base_degree / 2});
    }
    const std::size_t ng = info.size();

    auto even_linear = [&](const Polynomial& cls, int deg) {
        // Degree-deg even class expanded over the Thom generators of that
        // module degree.
        std::vector<Monomial> monos;
        for (std::size_t idx : A.coords(cls, deg)) {
            Monomial m(ng);
            m.exps[index_of.at({deg, idx})] = 1;
            monos.push_back(std::move(m));
        }
        return Polynomial(std::move(monos));
    };
    auto fixed_linear = [&](const Polynomial& delta, int e) {
        if (2 * e > cutoff - 2 * r)
            throw CutoffError("thom_space_frame: cutoff insufficient for the degree shift");
        std::vector<Monomial> monos;
        for (std::size_t idx : solve_over_kappa_basis(F, delta, e)) {
            Monomial m(ng);
            m.exps[index_of.at({2 * e, idx})] = 1;
            monos.push_back(std::move(m));
        }
        return Polynomial(std::move(monos));
    };

    std::vector<Polynomial> even_rels, fixed_rels;
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = i; j < ng; ++j) {
            const int prod_deg = 4 * r + info[i].base_degree + info[j].base_degree;
            Monomial quad(ng);
            quad.exps[i] += 1;
            quad.exps[j] += 1;

            // T_i * T_j = T(euler * m_i * m_j); even relations only matter
            // below the cutoff.
            if (prod_deg <= cutoff) {
                const Polynomial prod = A.mul(b.euler(), A.mul(Polynomial({info[i].monomial}),
                                                               Polynomial({info[j].monomial})));
                Polynomial rel({quad});
                if (!prod.is_zero())
                    rel = poly_add(rel, even_linear(prod, prod_deg - 2 * r));
                even_rels.push_back(std::move(rel));
            }

            // The fixed ring sees products up to twice as far; without these
            // relations it would grow spurious classes above half the cutoff.
            const Polynomial wprod =
                B.mul(b.sw_class(r),
                      B.mul(B.normal_form(F.kappa().apply(Polynomial({info[i].monomial}))),
                            B.normal_form(F.kappa().apply(Polynomial({info[j].monomial})))));
            Polynomial frel({quad});
            if (!wprod.is_zero())
                frel = poly_add(frel, fixed_linear(wprod, prod_deg / 2 - r));
            fixed_rels.push_back(std::move(frel));
        }

    GradedAlgebra even = GradedAlgebra::presented(even_gens, even_rels, cutoff);
    GradedAlgebra fixed = GradedAlgebra::presented(fixed_gens, fixed_rels, cutoff);

    std::vector<Polynomial> kappa_images;
    for (std::size_t g = 0; g < ng; ++g)
        kappa_images.push_back(fixed.gen(g));
    AlgebraMap kappa(even, fixed, DegreeScale::half, std::move(kappa_images));

    std::vector<UPoly> rsigma;
    for (std::size_t g = 0; g < ng; ++g) {
        const int total = 2 * r + info[g].base_degree;
        const UPoly rest = mod.module_restrict(Polynomial({info[g].monomial}));
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(total) + 1);
        for (int s = 0; s <= rest.u_degree(); ++s) {
            const Polynomial& delta = rest.coeff(s);
            if (delta.is_zero())
                continue;
            coeffs[s] = fixed_linear(delta, rest.total_degree() - s);
        }
        rsigma.emplace_back(fixed, total, std::move(coeffs));
    }

    return ConjugationFrame(std::move(even), std::move(fixed), std::move(kappa), std::move(rsigma));
}

ConjugationFrame projective_bundle_frame(const TauBundle& b) {
    const ConjugationFrame& F = b.base();
    const GradedAlgebra& A = F.even_ring();
    const GradedAlgebra& B = F.fixed_ring();
    const int r = b.rank();
    if (r < 1)
        throw AlgebraError("projective bundle needs positive rank");
    if (2 * r > F.cutoff())
        throw DegreeError("projective_bundle_frame: defining relation above the cutoff");

    auto fresh = [](const GradedAlgebra& ring, std::string base_name) {
        while (ring.generator_index(base_name) >= 0)
            base_name += '\'';
        return base_name;
    };
    const std::string tname = fresh(A, "t");
    const std::string sname = fresh(B, "s");

    std::vector<Generator> even_gens = A.generators();
    even_gens.push_back({tname, 2});
    std::vector<Generator> fixed_gens = B.generators();
    fixed_gens.push_back({sname, 1});

    const std::size_t na = A.ngens();
    const std::size_t nb = B.ngens();
    std::vector<std::size_t> amap(na), bmap(nb);
    for (std::size_t i = 0; i < na; ++i)
        amap[i] = i;
    for (std::size_t i = 0; i < nb; ++i)
        bmap[i] = i;

    std::vector<Polynomial> even_rels, fixed_rels;
    for (const Polynomial& rel : A.relations())
        even_rels.push_back(embed(rel, amap, na + 1));
    for (const Polynomial& rel : B.relations())
        fixed_rels.push_back(embed(rel, bmap, nb + 1));

    auto tpow = [&](int e) {
        Monomial m(na + 1);
        m.exps[na] = e;
        return m;
    };
    auto spow = [&](int e) {
        Monomial m(nb + 1);
        m.exps[nb] = e;
        return m;
    };
    Polynomial even_def({tpow(r)});
    Polynomial fixed_def({spow(r)});
    for (int i = 1; i <= r; ++i) {
        even_def = poly_add(even_def,
                            poly_mul_mono(embed(b.chern_class(i), amap, na + 1), tpow(r - i)));
        fixed_def =
            poly_add(fixed_def, poly_mul_mono(embed(b.sw_class(i), bmap, nb + 1), spow(r - i)));
    }
    even_rels.push_back(std::move(even_def));
    fixed_rels.push_back(std::move(fixed_def));

    GradedAlgebra even = GradedAlgebra::presented(even_gens, even_rels, A.cutoff());
    GradedAlgebra fixed = GradedAlgebra::presented(fixed_gens, fixed_rels, B.cutoff());

    std::vector<Polynomial> kappa_images;
    for (std::size_t i = 0; i < na; ++i)
        kappa_images.push_back(embed(F.kappa().images()[i], bmap, nb + 1));
    kappa_images.push_back(fixed.gen(nb));
    AlgebraMap kappa(even, fixed, DegreeScale::half, std::move(kappa_images));

    std::vector<UPoly> rsigma;
    for (std::size_t i = 0; i < na; ++i) {
        const UPoly& s = F.rsigma(i);
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(s.total_degree()) + 1);
        for (int u = 0; u <= s.u_degree(); ++u)
            coeffs[u] = embed(s.coeff(u), bmap, nb + 1);
        rsigma.emplace_back(fixed, s.total_degree(), std::move(coeffs));
    }
    // The hyperplane class restricts by the line-bundle rule.
    rsigma.emplace_back(fixed, 2,
                        std::vector<Polynomial>{Polynomial({spow(2)}), fixed.gen(nb)});

    return ConjugationFrame(std::move(even), std::move(fixed), std::move(kappa), std::move(rsigma));
}

} // namespace conjtk
