#include "conjcore/frame.hpp"

#include "conjcore/gf2.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace conjtk {

ConjugationFrame::ConjugationFrame(GradedAlgebra even_ring, GradedAlgebra fixed_ring,
                                   AlgebraMap kappa, std::vector<UPoly> rsigma)
    : even_(std::move(even_ring)), fixed_(std::move(fixed_ring)), kappa_(std::move(kappa)),
      rsigma_(std::move(rsigma)) {
    if (!kappa_.source().same_presentation(even_))
        throw AlgebraError("frame: kappa source is not the even ring");
    if (!kappa_.target().same_presentation(fixed_))
        throw AlgebraError("frame: kappa target is not the fixed ring");
    if (rsigma_.size() != even_.ngens())
        throw AlgebraError("frame: one restriction u-polynomial per even generator required");
    for (const UPoly& s : rsigma_)
        if (!s.ring().same_presentation(fixed_))
            throw AlgebraError("frame: restriction coefficients live in the wrong ring");
}

int ConjugationFrame::cutoff() const { return std::min(even_.cutoff(), fixed_.cutoff()); }

namespace {

// Multiplicative substitution of the stored u-polynomials into a raw
// homogeneous polynomial, without reducing the input first. verify_frame
// feeds the relations through this; everything else goes through
// restrict_class, which reduces the input to a class representative.
UPoly restrict_raw(const ConjugationFrame& frame, const Polynomial& p, int degree, int u_exp) {
    const GradedAlgebra& B = frame.fixed_ring();
    UPoly out(B, degree + u_exp);
    for (const Monomial& m : p.monos) {
        UPoly term(B, 0, {B.one()});
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e)
                term = term * frame.rsigma(i);
        out = out + term.shifted_u(u_exp);
    }
    return out;
}

} // namespace

UPoly restrict_class(const ConjugationFrame& frame, const Polynomial& a, int u_exp) {
    const GradedAlgebra& A = frame.even_ring();
    const GradedAlgebra& B = frame.fixed_ring();
    const Polynomial nf = A.normal_form(a);
    if (nf.is_zero())
        return UPoly(B, u_exp);
    if (!A.is_homogeneous(nf))
        throw AlgebraError("restrict: class must be homogeneous");
    const int d = A.degree(nf);
    if (d + u_exp > B.cutoff() || d > A.cutoff())
        throw DegreeError("restrict: degree above cutoff");
    return restrict_raw(frame, nf, d, u_exp);
}

Report verify_frame(const ConjugationFrame& frame) {
    Report rep;
    const GradedAlgebra& A = frame.even_ring();
    const GradedAlgebra& B = frame.fixed_ring();

    // (1) A concentrated in even degrees.
    {
        bool even_ok = true;
        std::string witness;
        for (const Generator& g : A.generators())
            if (g.degree % 2) {
                even_ok = false;
                witness = "generator " + g.name + " has odd degree " + std::to_string(g.degree);
                break;
            }
        rep.add("even-ring", even_ok, witness);
    }

    // (2) kappa well defined, with the halving scale.
    {
        bool ok = frame.kappa().scale() == DegreeScale::half;
        std::string witness = ok ? "" : "kappa does not halve degrees";
        if (ok) {
            const Report mr = check_map(frame.kappa());
            ok = mr.all_pass();
            if (!ok)
                for (const auto& c : mr.checks)
                    if (!c.pass && !c.witness.empty()) {
                        witness = c.witness;
                        break;
                    }
        }
        rep.add("kappa-well-defined", ok, witness);
    }

    // (3) kappa bijective degreewise up to the cutoff.
    {
        const IsoResult iso = is_iso_up_to(frame.kappa());
        rep.add("kappa-iso", iso.iso, iso.iso ? "" : iso.detail);
    }

    // (4) conjugation-equation shape on each generator.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < A.ngens(); ++i) {
            const Generator& g = A.generators()[i];
            const UPoly& s = frame.rsigma(i);
            const int m = g.degree / 2;
            std::ostringstream w;
            if (g.degree % 2) {
                ok = false;
                w << "generator " << g.name << " has odd degree";
            } else if (s.total_degree() != g.degree) {
                ok = false;
                w << "rsigma(" << g.name << ") has total degree " << s.total_degree() << ", expected "
                  << g.degree;
            } else if (s.u_degree() > m) {
                ok = false;
                w << "rsigma(" << g.name << ") has u-degree " << s.u_degree() << " above " << m;
            } else {
                const Polynomial lead = s.coeff(m);
                const Polynomial want = B.normal_form(frame.kappa().apply(A.gen(i)));
                if (!(lead == want)) {
                    ok = false;
                    w << "rsigma(" << g.name << ") has u^" << m << " coefficient " << B.format(lead)
                      << ", expected kappa(" << g.name << ") = " << B.format(want);
                }
            }
            if (!ok) {
                witness = w.str();
                break;
            }
        }
        rep.add("conjugation-equation", ok, witness);
    }

    // (5) the multiplicative extension annihilates the relations of A.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t r = 0; r < A.relations().size(); ++r) {
            const Polynomial& rel = A.relations()[r];
            if (A.degree(rel) > frame.cutoff())
                continue;
            bool shape_ok = true;
            for (std::size_t i = 0; i < A.ngens() && shape_ok; ++i)
                if (frame.rsigma(i).total_degree() != A.generators()[i].degree)
                    shape_ok = false;
            if (!shape_ok) {
                ok = false;
                witness = "restriction data malformed; relation check not meaningful";
                break;
            }
            const UPoly image = restrict_raw(frame, rel, A.degree(rel), 0);
            if (!image.is_zero()) {
                ok = false;
                witness = "relation " + A.format(rel) + " restricts to " + image.str();
                break;
            }
        }
        rep.add("rsigma-relations", ok, witness);
    }

    // (6) unit normalization: kappa(1) = 1 and the degree-0 pieces agree.
    {
        const Polynomial one_image = B.normal_form(frame.kappa().apply(A.one()));
        bool ok = one_image == B.one();
        std::string witness = ok ? "" : "kappa(1) = " + B.format(one_image);
        if (ok && A.basis(0).size() != B.basis(0).size()) {
            ok = false;
            witness = "degree-0 dimensions differ";
        }
        rep.add("unit-normalization", ok, witness);
    }

    return rep;
}

namespace {

// Column layout for the degree-d piece of B[u]: blocks by u-exponent, then
// the fixed-ring basis of the complementary degree.
struct BuLayout {
    std::vector<std::size_t> offset; // offset[i] = first column of the u^i block
    std::size_t total = 0;

    BuLayout(const GradedAlgebra& B, int d) {
        offset.resize(d + 1, 0);
        for (int i = 0; i <= d; ++i) {
            offset[i] = total;
            total += B.basis(d - i).size();
        }
    }
};

std::vector<std::size_t> upoly_support(const GradedAlgebra& B, const UPoly& p, const BuLayout& lay) {
    std::vector<std::size_t> cols;
    for (int i = 0; i <= p.u_degree(); ++i) {
        const Polynomial& c = p.coeff(i);
        if (c.is_zero())
            continue;
        for (std::size_t idx : B.coords(c, p.total_degree() - i))
            cols.push_back(lay.offset[i] + idx);
    }
    return cols;
}

} // namespace

InjectivityResult check_injectivity_r(const ConjugationFrame& frame) {
    const GradedAlgebra& A = frame.even_ring();
    const GradedAlgebra& B = frame.fixed_ring();
    const int cutoff = frame.cutoff();

    // Restrictions of the even basis, one UPoly per basis element, by degree.
    std::vector<std::vector<UPoly>> restricted(cutoff + 1);
    for (int d = 0; d <= cutoff; d += 2)
        for (const Monomial& m : A.basis(d))
            restricted[d].push_back(restrict_class(frame, Polynomial({m}), 0));

    for (int d = 0; d <= cutoff; ++d) {
        const BuLayout lay(B, d);
        Gf2Matrix mat(0, lay.total);
        struct RowName {
            int even_degree;
            std::size_t basis_index;
            int u_exp;
        };
        std::vector<RowName> names;
        for (int ad = 0; ad <= d; ad += 2) {
            const int j = d - ad;
            for (std::size_t bi = 0; bi < A.basis(ad).size(); ++bi) {
                const UPoly shifted = restricted[ad][bi].shifted_u(j);
                mat.append_row(upoly_support(B, shifted, lay));
                names.push_back({ad, bi, j});
            }
        }
        const auto kernel = left_kernel(mat);
        if (!kernel.empty()) {
            InjectivityResult res;
            res.injective = false;
            res.witness_degree = d;
            std::ostringstream w;
            bool first = true;
            for (std::size_t r : kernel.front()) {
                if (!first)
                    w << " + ";
                first = false;
                const RowName& n = names[r];
                w << "sigma(" << A.format(A.basis(n.even_degree)[n.basis_index]) << ")";
                if (n.u_exp > 0)
                    w << "*u";
                if (n.u_exp > 1)
                    w << '^' << n.u_exp;
            }
            res.witness = w.str();
            return res;
        }
    }
    return {};
}

LocalizeResult localize_check(const ConjugationFrame& frame) {
    LocalizeResult res;
    const GradedAlgebra& A = frame.even_ring();
    const GradedAlgebra& B = frame.fixed_ring();
    const int cutoff = frame.cutoff();

    const Series ha = A.hilbert();
    int top = -1;
    for (int d = 0; d <= cutoff; ++d)
        if (ha.at(d))
            top = d;
    res.top_degree = top;
    res.finite_dimensional = top < cutoff;

    if (res.finite_dimensional) {
        bool ok = true;
        std::string witness;
        const int m0 = std::max(top, 0);

        std::vector<std::vector<UPoly>> restricted(cutoff + 1);
        for (int d = 0; d <= cutoff; d += 2)
            for (const Monomial& m : A.basis(d))
                restricted[d].push_back(restrict_class(frame, Polynomial({m}), 0));

        // Image of the restriction inside the degree-d piece of B[u].
        std::vector<std::unique_ptr<Gf2Span>> spans(cutoff + 1);
        auto image_span = [&](int d) -> Gf2Span& {
            if (!spans[d]) {
                const BuLayout lay(B, d);
                spans[d] = std::make_unique<Gf2Span>(lay.total);
                for (int ad = 0; ad <= d; ad += 2)
                    for (const UPoly& s : restricted[ad])
                        spans[d]->insert_support(upoly_support(B, s.shifted_u(d - ad), lay));
            }
            return *spans[d];
        };

        // Largest degrees first: the induction direction of the argument.
        for (int db = std::min(cutoff - m0, cutoff); db >= 0 && ok; --db) {
            for (std::size_t bi = 0; bi < B.basis(db).size() && ok; ++bi) {
                const Polynomial beta = Polynomial({B.basis(db)[bi]});
                bool hit = false;
                for (int k = 0; k <= m0 && !hit; ++k) {
                    const int d = db + k;
                    if (d > cutoff)
                        break;
                    const BuLayout lay(B, d);
                    const UPoly target = UPoly::term(B, beta, k);
                    if (image_span(d).contains_support(upoly_support(B, target, lay)))
                        hit = true;
                }
                if (!hit) {
                    ok = false;
                    witness = "no u^k*" + B.format(beta) + " (k <= " + std::to_string(m0) +
                              ") lies in the image of the restriction";
                }
            }
        }
        res.report.add("localization-surjective", ok, witness);
    } else {
        res.report.add("localization-finite", true,
                       "even ring not finite dimensional below the cutoff; surjectivity part skipped");
    }

    {
        std::ostringstream w;
        for (std::size_t i = 0; i < A.ngens(); ++i) {
            const int v = frame.rsigma(i).eval_all_ones();
            res.fiber_values.push_back(v);
            if (i)
                w << ", ";
            w << A.generators()[i].name << " -> " << v;
        }
        res.report.add("localization-fiber", true, w.str());
    }
    return res;
}

HalvingResult halving_series(const ConjugationFrame& frame) {
    HalvingResult res;
    res.even = frame.even_ring().hilbert();
    res.fixed = frame.fixed_ring().hilbert();
    res.halves = Series::halving(res.even, res.fixed, frame.cutoff());
    return res;
}

FrameMorphism::FrameMorphism(ConjugationFrame source, ConjugationFrame target, AlgebraMap even_map,
                             AlgebraMap fixed_map)
    : source_(std::move(source)), target_(std::move(target)), even_map_(std::move(even_map)),
      fixed_map_(std::move(fixed_map)) {
    if (!even_map_.source().same_presentation(source_.even_ring()) ||
        !even_map_.target().same_presentation(target_.even_ring()))
        throw AlgebraError("frame morphism: even map endpoints do not match the frames");
    if (!fixed_map_.source().same_presentation(source_.fixed_ring()) ||
        !fixed_map_.target().same_presentation(target_.fixed_ring()))
        throw AlgebraError("frame morphism: fixed map endpoints do not match the frames");
    if (even_map_.scale() != DegreeScale::full || fixed_map_.scale() != DegreeScale::full)
        throw AlgebraError("frame morphism maps preserve degree");
}

Report verify_naturality(const FrameMorphism& m) {
    Report rep;
    const GradedAlgebra& Ax = m.source().even_ring();
    const GradedAlgebra& By = m.target().fixed_ring();

    {
        const bool ok = check_map(m.even_map()).all_pass() && check_map(m.fixed_map()).all_pass();
        rep.add("naturality-maps", ok, ok ? "" : "component map is not well defined");
        if (!ok)
            return rep;
    }

    // (i) fixed∘kappa_source = kappa_target∘even on generators.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < Ax.ngens(); ++i) {
            const Polynomial lhs =
                By.normal_form(m.fixed_map().apply(m.source().kappa().apply(Ax.gen(i))));
            const Polynomial rhs =
                By.normal_form(m.target().kappa().apply(m.even_map().apply(Ax.gen(i))));
            if (!(lhs == rhs)) {
                ok = false;
                std::ostringstream w;
                w << "generator " << Ax.generators()[i].name << " (degree "
                  << Ax.generators()[i].degree << "): " << By.format(lhs) << " != " << By.format(rhs);
                witness = w.str();
                break;
            }
        }
        rep.add("naturality-kappa", ok, witness);
    }

    // (ii) coefficientwise image of the stored restriction equals restriction
    // of the mapped generator.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < Ax.ngens(); ++i) {
            const UPoly& s = m.source().rsigma(i);
            std::vector<Polynomial> mapped(static_cast<std::size_t>(s.total_degree()) + 1);
            for (int u = 0; u <= s.u_degree(); ++u)
                mapped[u] = m.fixed_map().apply(s.coeff(u));
            const UPoly lhs(By, s.total_degree(), std::move(mapped));
            const UPoly rhs = restrict_class(m.target(), m.even_map().apply(Ax.gen(i)), 0);
            if (!(lhs == rhs)) {
                ok = false;
                std::ostringstream w;
                w << "generator " << Ax.generators()[i].name << ": mapped restriction " << lhs.str()
                  << " != " << rhs.str();
                witness = w.str();
                break;
            }
        }
        rep.add("naturality-rsigma", ok, witness);
    }
    return rep;
}

FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f) {
    return FrameMorphism(f.source(), g.target(), compose(g.even_map(), f.even_map()),
                         compose(g.fixed_map(), f.fixed_map()));
}

FrameModule::FrameModule(ConjugationFrame base, int rank, UPoly omega, Polynomial euler)
    : base_(std::move(base)), rank_(rank), omega_(std::move(omega)),
      euler_(base_.even_ring().normal_form(std::move(euler))) {
    if (rank_ < 0)
        throw AlgebraError("module rank must be nonnegative");
    if (omega_.total_degree() != rank_)
        throw AlgebraError("restriction factor must have total degree equal to the rank");
}

UPoly FrameModule::module_restrict(const Polynomial& a, int u_exp) const {
    return (omega_ * restrict_class(base_, a, 0)).shifted_u(u_exp);
}

Report FrameModule::verify() const {
    Report rep;
    const GradedAlgebra& B = base_.fixed_ring();
    rep.add("thom-leading", omega_.coeff(rank_) == B.one(),
            omega_.coeff(rank_) == B.one() ? ""
                                           : "u^rank coefficient is " + B.format(omega_.coeff(rank_)));
    const Polynomial want = B.normal_form(base_.kappa().apply(euler_));
    rep.add("thom-euler", omega_.coeff(0) == want,
            omega_.coeff(0) == want ? ""
                                    : "u^0 coefficient " + B.format(omega_.coeff(0)) +
                                          " != kappa(euler) = " + B.format(want));
    return rep;
}

} // namespace conjtk
