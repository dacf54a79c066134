#include "conjcore/serialize.hpp"

#include <algorithm>

namespace conjtk {

Json to_json(const Series& s) {
    Json out = Json::array();
    for (std::int64_t c : s.coeffs())
        out.push_back(c);
    return out;
}

Json to_json(const GradedAlgebra& ring) {
    Json out;
    out["generators"] = Json::array();
    for (const Generator& g : ring.generators())
        out["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    out["relations"] = Json::array();
    for (const Polynomial& r : ring.relations())
        out["relations"].push_back(ring.format(r));
    out["cutoff"] = ring.cutoff();
    return out;
}

GradedAlgebra algebra_from_json(const Json& j, int default_cutoff) {
    std::vector<Generator> gens;
    for (const Json& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    const int cutoff = j.value("cutoff", default_cutoff);
    // Parse relations against a relation-free ring with the same generators.
    GradedAlgebra shell = GradedAlgebra::free_algebra(gens, cutoff);
    std::vector<Polynomial> rels;
    if (j.contains("relations"))
        for (const Json& r : j.at("relations"))
            rels.push_back(shell.parse(r.get<std::string>()));
    return GradedAlgebra::presented(std::move(gens), std::move(rels), cutoff);
}

Json to_json(const ConjugationFrame& frame) {
    Json out;
    out["even_ring"] = to_json(frame.even_ring());
    out["fixed_ring"] = to_json(frame.fixed_ring());
    Json kappa = Json::object();
    for (std::size_t i = 0; i < frame.even_ring().ngens(); ++i)
        kappa[frame.even_ring().generators()[i].name] =
            frame.fixed_ring().format(frame.kappa().images()[i]);
    out["kappa"] = std::move(kappa);
    Json rsigma = Json::object();
    for (std::size_t i = 0; i < frame.even_ring().ngens(); ++i) {
        Json terms = Json::array();
        const UPoly& s = frame.rsigma(i);
        for (int u = s.u_degree(); u >= 0; --u)
            if (!s.coeff(u).is_zero())
                terms.push_back(
                    {{"u_exp", u}, {"coeff", frame.fixed_ring().format(s.coeff(u))}});
        rsigma[frame.even_ring().generators()[i].name] = std::move(terms);
    }
    out["rsigma"] = std::move(rsigma);
    return out;
}

ConjugationFrame frame_from_json(const Json& j, int default_cutoff) {
    GradedAlgebra even = algebra_from_json(j.at("even_ring"), default_cutoff);
    GradedAlgebra fixed = algebra_from_json(j.at("fixed_ring"), default_cutoff);

    std::vector<Polynomial> images(even.ngens());
    for (const auto& [name, value] : j.at("kappa").items()) {
        const int gi = even.generator_index(name);
        if (gi < 0)
            throw ParseError("kappa names unknown generator '" + name + "'");
        images[gi] = fixed.parse(value.get<std::string>());
    }
    AlgebraMap kappa(even, fixed, DegreeScale::half, std::move(images));

    std::vector<UPoly> rsigma;
    for (std::size_t i = 0; i < even.ngens(); ++i) {
        const std::string& name = even.generators()[i].name;
        const int total = even.generators()[i].degree;
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(std::max(total, 0)) + 1);
        if (j.at("rsigma").contains(name))
            for (const Json& term : j.at("rsigma").at(name)) {
                const int u = term.at("u_exp").get<int>();
                if (u < 0 || u > total)
                    throw ParseError("rsigma u-exponent out of range for generator '" + name + "'");
                coeffs[u] =
                    poly_add(coeffs[u], fixed.parse(term.at("coeff").get<std::string>()));
            }
        rsigma.emplace_back(fixed, total, std::move(coeffs));
    }
    return ConjugationFrame(std::move(even), std::move(fixed), std::move(kappa), std::move(rsigma));
}

Json to_json(const Report& report) {
    Json out = Json::array();
    for (const CheckResult& c : report.checks) {
        Json entry;
        entry["check_id"] = c.id;
        entry["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty())
            entry["witness"] = c.witness;
        out.push_back(std::move(entry));
    }
    return out;
}

Json to_json(const CellSpec& spec) {
    Json out = Json::array();
    for (const CellStage& st : spec.stages)
        out.push_back({{"dim", st.dim}, {"count", st.count}});
    return out;
}

CellSpec cellspec_from_json(const Json& j) {
    CellSpec spec;
    for (const Json& st : j)
        spec.stages.push_back({st.at("dim").get<int>(), st.at("count").get<std::int64_t>()});
    return spec;
}

Json to_json(const ToricPolytope& p) {
    Json out;
    out["dim"] = p.dim;
    out["facets"] = p.facets;
    out["labels"] = p.labels;
    out["vertices"] = p.vertices;
    return out;
}

ToricPolytope polytope_from_json(const Json& j) {
    ToricPolytope p;
    p.dim = j.at("dim").get<int>();
    p.facets = j.at("facets").get<std::vector<std::string>>();
    p.labels = j.at("labels").get<std::vector<std::vector<long long>>>();
    p.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    return p;
}

namespace {

// Minimal presentation of one ring: generators whose reduced-basis element is
// linear in them get substituted away. For a reduced basis the rewriting is a
// single pass: tails of basis elements are standard monomials and cannot
// mention an eliminated generator.
struct Minimal {
    GradedAlgebra ring;
    // Expression of each old generator in the new ring.
    std::vector<Polynomial> images;
    // Old indices of the surviving generators, in new-generator order.
    std::vector<std::size_t> keep;
};

Minimal minimalize(const GradedAlgebra& ring, const std::string& name_prefix) {
    const std::size_t n = ring.ngens();
    std::vector<int> redundant(n, -1); // index into the basis elements used
    for (std::size_t g = 0; g < ring.groebner_basis().size(); ++g) {
        const Monomial& lead = ring.leading(ring.groebner_basis()[g]);
        if (lead.total_exponent() != 1)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            if (lead.exps[i] == 1)
                redundant[i] = static_cast<int>(g);
    }

    std::vector<std::size_t> keep;
    std::vector<std::size_t> new_index(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (redundant[i] < 0) {
            new_index[i] = keep.size();
            keep.push_back(i);
        }

    std::vector<Generator> gens;
    for (std::size_t j = 0; j < keep.size(); ++j)
        gens.push_back({name_prefix + std::to_string(j + 1), ring.generators()[keep[j]].degree});

    auto reindex = [&](const Polynomial& p) {
        std::vector<Monomial> monos;
        for (const Monomial& m : p.monos) {
            Monomial t(keep.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (!m.exps[i])
                    continue;
                if (redundant[i] >= 0)
                    throw AlgebraError("minimalize: eliminated generator appears in a tail");
                t.exps[new_index[i]] = m.exps[i];
            }
            monos.push_back(std::move(t));
        }
        return Polynomial(std::move(monos));
    };

    std::vector<Polynomial> rels;
    for (const Polynomial& g : ring.groebner_basis())
        if (ring.leading(g).total_exponent() != 1)
            rels.push_back(reindex(g));
    std::sort(rels.begin(), rels.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.monos < b.monos; });

    Minimal out{GradedAlgebra::presented(std::move(gens), std::move(rels), ring.cutoff()),
                {},
                keep};
    for (std::size_t i = 0; i < n; ++i) {
        if (redundant[i] < 0) {
            out.images.push_back(out.ring.gen(new_index[i]));
        } else {
            // lead + tail = 0, so the generator equals its tail.
            const Polynomial& g = ring.groebner_basis()[static_cast<std::size_t>(redundant[i])];
            Polynomial tail = poly_add(g, Polynomial({ring.leading(g)}));
            out.images.push_back(out.ring.normal_form(reindex(tail)));
        }
    }
    return out;
}

Polynomial transport(const Polynomial& p, const Minimal& target) {
    Polynomial out = target.ring.zero();
    for (const Monomial& m : p.monos) {
        Polynomial term = target.ring.one();
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e)
                term = target.ring.mul(term, target.images[i]);
        out = target.ring.add(out, term);
    }
    return out;
}

} // namespace

ConjugationFrame canonical_frame(const ConjugationFrame& frame) {
    const Minimal even = minimalize(frame.even_ring(), "g");
    const Minimal fixed = minimalize(frame.fixed_ring(), "h");

    std::vector<Polynomial> kappa_images;
    std::vector<UPoly> rsigma;
    for (std::size_t j = 0; j < even.keep.size(); ++j) {
        const std::size_t old_i = even.keep[j];
        kappa_images.push_back(transport(frame.kappa().images()[old_i], fixed));
        const UPoly& s = frame.rsigma(old_i);
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(s.total_degree()) + 1);
        for (int u = 0; u <= s.u_degree(); ++u)
            coeffs[u] = transport(s.coeff(u), fixed);
        rsigma.emplace_back(fixed.ring, s.total_degree(), std::move(coeffs));
    }

    AlgebraMap kappa(even.ring, fixed.ring, DegreeScale::half, std::move(kappa_images));
    return ConjugationFrame(even.ring, fixed.ring, std::move(kappa), std::move(rsigma));
}

Json canonical_json(const ConjugationFrame& frame) { return to_json(canonical_frame(frame)); }

} // namespace conjtk
