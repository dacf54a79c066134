#include "conjcore/constructors.hpp"

#include "conjcore/symmetric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace conjtk {

ConjugationFrame point_frame(int cutoff) {
    GradedAlgebra A(cutoff);
    GradedAlgebra B(cutoff);
    return ConjugationFrame(A, B, AlgebraMap(A, B, DegreeScale::half, {}), {});
}

ConjugationFrame sphere_frame(int k, int cutoff) {
    if (k < 1)
        throw AlgebraError("sphere_frame: k must be at least 1");
    if (2 * k > cutoff)
        throw DegreeError("sphere_frame: generator degree above the cutoff");
    GradedAlgebra A = GradedAlgebra::presented({{"a", 2 * k}},
                                               {Polynomial({Monomial({2})})}, cutoff);
    GradedAlgebra B = GradedAlgebra::presented({{"b", k}}, {Polynomial({Monomial({2})})}, cutoff);
    AlgebraMap kappa(A, B, DegreeScale::half, {B.gen(0)});
    // Exact conjugation equation: no lower-order terms.
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(2 * k) + 1);
    coeffs[k] = B.gen(0);
    std::vector<UPoly> rsigma;
    rsigma.emplace_back(B, 2 * k, std::move(coeffs));
    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

ConjugationFrame projective_frame(int n, int cutoff) {
    if (n != kInfinite && n < 1)
        throw AlgebraError("projective_frame: n must be at least 1");
    std::vector<Polynomial> arels, brels;
    if (n != kInfinite) {
        arels.push_back(Polynomial({Monomial({n + 1})}));
        brels.push_back(Polynomial({Monomial({n + 1})}));
    }
    GradedAlgebra A = GradedAlgebra::presented({{"a", 2}}, arels, cutoff);
    GradedAlgebra B = GradedAlgebra::presented({{"b", 1}}, brels, cutoff);
    AlgebraMap kappa(A, B, DegreeScale::half, {B.gen(0)});
    // r(a) = b*u + b^2, the Euler-class identity of the fixed Hopf bundle.
    std::vector<UPoly> rsigma;
    rsigma.emplace_back(B, 2, std::vector<Polynomial>{Polynomial({Monomial({2})}), B.gen(0)});
    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

ConjugationFrame bt_frame(int r, int cutoff) {
    if (r < 1)
        throw AlgebraError("bt_frame: rank must be at least 1");
    std::vector<Generator> agens, bgens;
    for (int i = 1; i <= r; ++i) {
        agens.push_back({"a" + std::to_string(i), 2});
        bgens.push_back({"b" + std::to_string(i), 1});
    }
    GradedAlgebra A = GradedAlgebra::free_algebra(agens, cutoff);
    GradedAlgebra B = GradedAlgebra::free_algebra(bgens, cutoff);
    std::vector<Polynomial> images;
    std::vector<UPoly> rsigma;
    for (int i = 0; i < r; ++i) {
        images.push_back(B.gen(i));
        Monomial sq(static_cast<std::size_t>(r));
        sq.exps[i] = 2;
        rsigma.emplace_back(B, 2, std::vector<Polynomial>{Polynomial({sq}), B.gen(i)});
    }
    AlgebraMap kappa(A, B, DegreeScale::half, std::move(images));
    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

ConjugationFrame product_frame(const ConjugationFrame& f, const ConjugationFrame& g) {
    TensorResult even = tensor(f.even_ring(), g.even_ring());
    TensorResult fixed = tensor(f.fixed_ring(), g.fixed_ring());

    const std::size_t nb = fixed.ring.ngens();
    std::vector<Polynomial> images;
    std::vector<UPoly> rsigma;
    auto include_factor = [&](const ConjugationFrame& factor, const std::vector<std::size_t>& bmap) {
        for (std::size_t i = 0; i < factor.even_ring().ngens(); ++i) {
            images.push_back(embed(factor.kappa().images()[i], bmap, nb));
            const UPoly& s = factor.rsigma(i);
            std::vector<Polynomial> coeffs(static_cast<std::size_t>(s.total_degree()) + 1);
            for (int u = 0; u <= s.u_degree(); ++u)
                coeffs[u] = embed(s.coeff(u), bmap, nb);
            rsigma.emplace_back(fixed.ring, s.total_degree(), std::move(coeffs));
        }
    };
    include_factor(f, fixed.left);
    include_factor(g, fixed.right);

    AlgebraMap kappa(even.ring, fixed.ring, DegreeScale::half, std::move(images));
    return ConjugationFrame(even.ring, fixed.ring, std::move(kappa), std::move(rsigma));
}

namespace {

// Polynomial over a target ring from elementary-basis exponent vectors, the
// elementary polynomials sitting at consecutive generator indices starting at
// `offset`.
Polynomial from_elementary(const std::vector<Monomial>& evec, std::size_t offset,
                           std::size_t target_ngens) {
    std::vector<Monomial> monos;
    for (const Monomial& nu : evec) {
        Monomial m(target_ngens);
        for (std::size_t j = 0; j < nu.exps.size(); ++j)
            m.exps[offset + j] = nu.exps[j];
        monos.push_back(std::move(m));
    }
    return Polynomial(std::move(monos));
}

} // namespace

ConjugationFrame grassmannian_frame(int k, int n, int cutoff) {
    if (k < 1 || (n != kInfinite && n <= k))
        throw AlgebraError("grassmannian_frame: need 1 <= k < n");
    const int kc = (n == kInfinite) ? 0 : n - k; // complement rank
    const std::size_t ngens = static_cast<std::size_t>(k + kc);

    std::vector<Generator> agens, bgens;
    for (int i = 1; i <= k; ++i) {
        agens.push_back({"c" + std::to_string(i), 2 * i});
        bgens.push_back({"w" + std::to_string(i), i});
    }
    for (int j = 1; j <= kc; ++j) {
        agens.push_back({"cb" + std::to_string(j), 2 * j});
        bgens.push_back({"wb" + std::to_string(j), j});
    }
    for (const Generator& g : agens)
        if (g.degree > cutoff)
            throw DegreeError("grassmannian_frame: generator degree above the cutoff");

    // Graded pieces of c * cbar = 1.
    std::vector<Polynomial> arels, brels;
    if (n != kInfinite) {
        for (int d = 1; d <= n; ++d) {
            std::vector<Monomial> monos;
            for (int i = std::max(0, d - kc); i <= std::min(d, k); ++i) {
                const int j = d - i;
                Monomial m(ngens);
                if (i > 0)
                    m.exps[i - 1] = 1;
                if (j > 0)
                    m.exps[k + j - 1] += 1;
                monos.push_back(std::move(m));
            }
            arels.push_back(Polynomial(monos));
            brels.push_back(Polynomial(monos)); // same exponent data, halved weights
        }
    }

    GradedAlgebra A = GradedAlgebra::presented(agens, arels, cutoff);
    GradedAlgebra B = GradedAlgebra::presented(bgens, brels, cutoff);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ngens; ++i)
        images.push_back(B.gen(i));
    AlgebraMap kappa(A, B, DegreeScale::half, std::move(images));

    const auto taut = splitting_expansion(k);
    const auto comp = splitting_expansion(kc);
    std::vector<UPoly> rsigma;
    for (int i = 1; i <= k; ++i) {
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(2 * i) + 1);
        for (int s = 0; s <= i; ++s)
            coeffs[s] = from_elementary(taut[i][s], 0, ngens);
        rsigma.emplace_back(B, 2 * i, std::move(coeffs));
    }
    for (int j = 1; j <= kc; ++j) {
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(2 * j) + 1);
        for (int s = 0; s <= j; ++s)
            coeffs[s] = from_elementary(comp[j][s], static_cast<std::size_t>(k), ngens);
        rsigma.emplace_back(B, 2 * j, std::move(coeffs));
    }

    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

ConjugationFrame connected_sum_frame(const ConjugationFrame& f, const ConjugationFrame& g,
                                     int dimension, bool closed_manifold_attested) {
    if (!closed_manifold_attested)
        throw AlgebraError("connected_sum_frame: closed-manifold provenance must be attested");
    if (dimension < 2 || dimension % 2)
        throw AlgebraError("connected_sum_frame: formal dimension must be even and positive");
    const int k = dimension / 2;

    auto check_poincare = [&](const ConjugationFrame& fr, const char* which) {
        const Series h = fr.even_ring().hilbert();
        if (fr.cutoff() < dimension)
            throw DegreeError(std::string("connected_sum_frame: ") + which +
                              " cutoff below the formal dimension");
        if (h.at(0) != 1 || h.at(dimension) != 1)
            throw AlgebraError(std::string("connected_sum_frame: ") + which +
                               " is not Poincaré-like of dimension " + std::to_string(dimension));
        for (int d = dimension + 1; d <= fr.cutoff(); ++d)
            if (h.at(d) != 0)
                throw AlgebraError(std::string("connected_sum_frame: ") + which +
                                   " has classes above the formal dimension");
    };
    check_poincare(f, "first summand");
    check_poincare(g, "second summand");

    TensorResult even = tensor(f.even_ring(), g.even_ring());
    TensorResult fixed = tensor(f.fixed_ring(), g.fixed_ring());
    const std::size_t nea = even.ring.ngens();
    const std::size_t nfb = fixed.ring.ngens();

    // Cross products of positive-degree classes vanish; it is enough to kill
    // generator pairs.
    std::vector<Polynomial> even_rels = even.ring.relations();
    for (std::size_t i = 0; i < f.even_ring().ngens(); ++i)
        for (std::size_t j = 0; j < g.even_ring().ngens(); ++j) {
            Monomial m(nea);
            m.exps[even.left[i]] = 1;
            m.exps[even.right[j]] += 1;
            even_rels.push_back(Polynomial({m}));
        }
    std::vector<Polynomial> fixed_rels = fixed.ring.relations();
    for (std::size_t i = 0; i < f.fixed_ring().ngens(); ++i)
        for (std::size_t j = 0; j < g.fixed_ring().ngens(); ++j) {
            Monomial m(nfb);
            m.exps[fixed.left[i]] = 1;
            m.exps[fixed.right[j]] += 1;
            fixed_rels.push_back(Polynomial({m}));
        }

    // Top classes are identified, on both the even and the fixed side.
    const Polynomial even_top =
        poly_add(embed(Polynomial({f.even_ring().basis(dimension).front()}), even.left, nea),
                 embed(Polynomial({g.even_ring().basis(dimension).front()}), even.right, nea));
    even_rels.push_back(even_top);
    if (f.fixed_ring().basis(k).size() != 1 || g.fixed_ring().basis(k).size() != 1)
        throw AlgebraError("connected_sum_frame: fixed rings are not Poincaré-like");
    const Polynomial fixed_top =
        poly_add(embed(Polynomial({f.fixed_ring().basis(k).front()}), fixed.left, nfb),
                 embed(Polynomial({g.fixed_ring().basis(k).front()}), fixed.right, nfb));
    fixed_rels.push_back(fixed_top);

    GradedAlgebra A =
        GradedAlgebra::presented(even.ring.generators(), even_rels, even.ring.cutoff());
    GradedAlgebra B =
        GradedAlgebra::presented(fixed.ring.generators(), fixed_rels, fixed.ring.cutoff());

    std::vector<Polynomial> images;
    std::vector<UPoly> rsigma;
    auto include_summand = [&](const ConjugationFrame& fr, const std::vector<std::size_t>& bmap) {
        for (std::size_t i = 0; i < fr.even_ring().ngens(); ++i) {
            images.push_back(embed(fr.kappa().images()[i], bmap, nfb));
            const UPoly& s = fr.rsigma(i);
            std::vector<Polynomial> coeffs(static_cast<std::size_t>(s.total_degree()) + 1);
            for (int u = 0; u <= s.u_degree(); ++u)
                coeffs[u] = embed(s.coeff(u), bmap, nfb);
            rsigma.emplace_back(B, s.total_degree(), std::move(coeffs));
        }
    };
    include_summand(f, fixed.left);
    include_summand(g, fixed.right);

    AlgebraMap kappa(A, B, DegreeScale::half, std::move(images));
    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

namespace {

long long det_bareiss(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    long long prev = 1;
    long long sign = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (m[p][p] == 0) {
            std::size_t swap_with = p + 1;
            while (swap_with < n && m[swap_with][p] == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            std::swap(m[p], m[swap_with]);
            sign = -sign;
        }
        for (std::size_t r = p + 1; r < n; ++r)
            for (std::size_t c = p + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[p][p] - m[r][p] * m[p][c]) / prev;
        prev = m[p][p];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

ConjugationFrame toric_frame(const ToricPolytope& p, int cutoff) {
    const std::size_t nf = p.facets.size();
    if (p.dim < 1)
        throw AlgebraError("toric_frame: dimension must be positive");
    if (p.labels.size() != nf)
        throw AlgebraError("toric_frame: one label vector per facet required");
    for (const auto& l : p.labels)
        if (static_cast<int>(l.size()) != p.dim)
            throw AlgebraError("toric_frame: label length must equal the dimension");

    std::set<std::set<int>> vertex_sets;
    for (const auto& v : p.vertices) {
        if (static_cast<int>(v.size()) != p.dim)
            throw AlgebraError("toric_frame: a simple polytope has dim facets per vertex");
        std::vector<std::vector<long long>> mat;
        std::set<int> vs;
        for (int fi : v) {
            if (fi < 0 || fi >= static_cast<int>(nf))
                throw AlgebraError("toric_frame: vertex references an unknown facet");
            if (!vs.insert(fi).second)
                throw AlgebraError("toric_frame: repeated facet at a vertex");
            mat.push_back(p.labels[fi]);
        }
        const long long det = det_bareiss(mat);
        if (det != 1 && det != -1)
            throw AlgebraError("toric_frame: label matrix at a vertex has determinant " +
                               std::to_string(det) + "; characteristic data is not smooth");
        vertex_sets.insert(std::move(vs));
    }
    if (vertex_sets.empty())
        throw AlgebraError("toric_frame: at least one vertex required");

    auto is_face = [&](const std::set<int>& s) {
        for (const auto& vs : vertex_sets)
            if (std::includes(vs.begin(), vs.end(), s.begin(), s.end()))
                return true;
        return false;
    };

    // Minimal non-faces, by increasing size: extend faces one facet at a
    // time, then keep only sets all of whose facets-removed subsets are faces.
    std::vector<std::set<int>> nonfaces;
    std::vector<std::set<int>> frontier{{}};
    for (int size = 1; size <= static_cast<int>(nf); ++size) {
        std::vector<std::set<int>> next;
        for (const auto& s : frontier) {
            const int start = s.empty() ? 0 : *s.rbegin() + 1;
            for (int fi = start; fi < static_cast<int>(nf); ++fi) {
                std::set<int> t = s;
                t.insert(fi);
                if (is_face(t)) {
                    next.push_back(std::move(t));
                    continue;
                }
                bool minimal = true;
                for (int drop : t) {
                    std::set<int> sub = t;
                    sub.erase(drop);
                    if (!is_face(sub)) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal)
                    nonfaces.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Generator> agens, bgens;
    for (const std::string& f : p.facets) {
        agens.push_back({"x_" + f, 2});
        bgens.push_back({"y_" + f, 1});
    }

    std::vector<Polynomial> arels, brels;
    for (const auto& s : nonfaces) {
        Monomial m(nf);
        for (int fi : s)
            m.exps[fi] = 1;
        arels.push_back(Polynomial({m}));
        brels.push_back(Polynomial({m}));
    }
    for (int coord = 0; coord < p.dim; ++coord) {
        std::vector<Monomial> monos;
        for (std::size_t fi = 0; fi < nf; ++fi)
            if (((p.labels[fi][coord] % 2) + 2) % 2 == 1) {
                Monomial m(nf);
                m.exps[fi] = 1;
                monos.push_back(std::move(m));
            }
        Polynomial rel(std::move(monos));
        if (!rel.is_zero()) {
            arels.push_back(rel);
            brels.push_back(rel);
        }
    }

    GradedAlgebra A = GradedAlgebra::presented(agens, arels, cutoff);
    GradedAlgebra B = GradedAlgebra::presented(bgens, brels, cutoff);

    std::vector<Polynomial> images;
    std::vector<UPoly> rsigma;
    for (std::size_t fi = 0; fi < nf; ++fi) {
        images.push_back(B.gen(fi));
        Monomial sq(nf);
        sq.exps[fi] = 2;
        rsigma.emplace_back(B, 2, std::vector<Polynomial>{Polynomial({sq}), B.gen(fi)});
    }
    AlgebraMap kappa(A, B, DegreeScale::half, std::move(images));
    return ConjugationFrame(std::move(A), std::move(B), std::move(kappa), std::move(rsigma));
}

namespace {

std::string describe_mismatch(const ConjugationFrame& small, const ConjugationFrame& large,
                              int common) {
    const GradedAlgebra& As = small.even_ring();
    const GradedAlgebra& Al = large.even_ring();
    if (As.generators() != Al.generators())
        return "generator lists differ";
    auto filtered = [&](const GradedAlgebra& ring) {
        std::vector<Polynomial> rels;
        for (const Polynomial& r : ring.relations())
            if (ring.degree(r) <= common)
                rels.push_back(r);
        std::sort(rels.begin(), rels.end(),
                  [](const Polynomial& a, const Polynomial& b) { return a.monos < b.monos; });
        return rels;
    };
    if (filtered(As) != filtered(Al))
        return "even-ring relations differ below degree " + std::to_string(common);
    if (filtered(small.fixed_ring()) != filtered(large.fixed_ring()))
        return "fixed-ring relations differ below degree " + std::to_string(common);
    for (std::size_t i = 0; i < As.ngens(); ++i) {
        if (!(small.kappa().images()[i] == large.kappa().images()[i]))
            return "kappa image of " + As.generators()[i].name + " differs";
        const UPoly& ss = small.rsigma(i);
        const UPoly& sl = large.rsigma(i);
        if (ss.total_degree() != sl.total_degree())
            return "restriction of " + As.generators()[i].name + " has mismatched degree";
        for (int u = 0; u <= std::max(ss.u_degree(), sl.u_degree()); ++u)
            if (!(ss.coeff(u) == sl.coeff(u)))
                return "restriction of " + As.generators()[i].name + " differs at u^" +
                       std::to_string(u);
    }
    return "";
}

} // namespace

Report stabilize(const FrameFamily& family, const std::vector<int>& cutoffs) {
    Report rep;
    if (cutoffs.size() < 2) {
        rep.add("stabilize", false, "need at least two cutoffs");
        return rep;
    }
    std::vector<int> sorted = cutoffs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const ConjugationFrame small = family.build(sorted[i]);
        const ConjugationFrame large = family.build(sorted[i + 1]);
        const std::string witness = describe_mismatch(small, large, sorted[i]);
        std::ostringstream id;
        id << "stabilize:" << family.name << ':' << sorted[i] << "->" << sorted[i + 1];
        rep.add(id.str(), witness.empty(), witness);
    }
    return rep;
}

FiberSeriesResult fiber_bundle_series(const CellSpec& base, const ConjugationFrame& fiber,
                                      int cutoff) {
    const CellSeries bs = poincare_series(base, cutoff);
    FiberSeriesResult out;
    out.total = convolve(bs.space, fiber.even_ring().hilbert(), cutoff);
    out.total_real = convolve(bs.real_locus, fiber.fixed_ring().hilbert(), cutoff);
    out.halves = Series::halving(out.total, out.total_real, cutoff);
    return out;
}

} // namespace conjtk
