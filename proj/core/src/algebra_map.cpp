#include "conjcore/algebra_map.hpp"

#include "conjcore/gf2.hpp"

#include <sstream>

namespace conjtk {

AlgebraMap::AlgebraMap(GradedAlgebra source, GradedAlgebra target, DegreeScale scale,
                       std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), scale_(scale),
      images_(std::move(images)) {
    if (images_.size() != source_.ngens())
        throw AlgebraError("algebra map needs exactly one image per source generator");
    for (Polynomial& im : images_)
        im = target_.normal_form(std::move(im));
}

AlgebraMap AlgebraMap::identity(const GradedAlgebra& ring) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring.ngens(); ++i)
        images.push_back(ring.gen(i));
    return AlgebraMap(ring, ring, DegreeScale::full, std::move(images));
}

int AlgebraMap::scaled_degree(int d) const {
    if (scale_ == DegreeScale::full)
        return d;
    return (d % 2 == 0) ? d / 2 : -1;
}

Polynomial AlgebraMap::apply(const Polynomial& p) const {
    Polynomial out = target_.zero();
    for (const Monomial& m : p.monos) {
        Polynomial term = target_.one();
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e)
                term = target_.mul(term, images_[i]);
        out = target_.add(out, term);
    }
    return out;
}

Report check_map(const AlgebraMap& f) {
    Report rep;
    const auto& src = f.source();
    const auto& tgt = f.target();

    bool degrees_ok = true;
    Report per_gen;
    for (std::size_t i = 0; i < src.ngens(); ++i) {
        const Generator& g = src.generators()[i];
        const int want = f.scaled_degree(g.degree);
        std::ostringstream w;
        if (want < 0) {
            degrees_ok = false;
            w << "generator " << g.name << " has odd degree " << g.degree
              << " under a degree-halving map";
            per_gen.add("degree:" + g.name, false, w.str());
            continue;
        }
        const Polynomial& im = f.images()[i];
        if (im.is_zero())
            continue; // zero is homogeneous of any degree
        if (!tgt.is_homogeneous(im) || tgt.degree(im) != want) {
            degrees_ok = false;
            w << "generator " << g.name << ": image " << tgt.format(im) << " is not homogeneous of degree "
              << want;
            per_gen.add("degree:" + g.name, false, w.str());
        }
    }
    rep.add("map-degrees", degrees_ok,
            degrees_ok ? "" : "one or more generator images violate the degree scale");
    rep.append(per_gen);
    if (!degrees_ok) {
        rep.add("map-relations", false, "skipped: degree check failed");
        return rep;
    }

    bool relations_ok = true;
    Report per_rel;
    for (std::size_t r = 0; r < src.relations().size(); ++r) {
        const Polynomial& rel = src.relations()[r];
        const int sd = f.scaled_degree(src.degree(rel));
        if (src.degree(rel) > src.cutoff() || sd > tgt.cutoff())
            continue; // beyond the reach of the truncated computation
        const Polynomial image = f.apply(rel);
        if (!image.is_zero()) {
            relations_ok = false;
            std::ostringstream w;
            w << "relation " << src.format(rel) << " maps to " << tgt.format(image);
            per_rel.add("relation:" + std::to_string(r), false, w.str());
        }
    }
    rep.add("map-relations", relations_ok,
            relations_ok ? "" : "one or more relations do not map to zero");
    rep.append(per_rel);
    return rep;
}

IsoResult is_iso_up_to(const AlgebraMap& f) {
    const auto& src = f.source();
    const auto& tgt = f.target();
    const int reach = (f.scale() == DegreeScale::half)
                          ? std::min(src.cutoff(), 2 * tgt.cutoff())
                          : std::min(src.cutoff(), tgt.cutoff());

    for (int d = 0; d <= reach; ++d) {
        const int sd = f.scaled_degree(d);
        const auto& src_basis = src.basis(d);
        if (sd < 0) {
            if (!src_basis.empty()) {
                IsoResult res;
                res.iso = false;
                res.first_fail_degree = d;
                res.detail = "source has classes in odd degree " + std::to_string(d);
                return res;
            }
            continue;
        }
        const auto& tgt_basis = tgt.basis(sd);
        if (src_basis.size() != tgt_basis.size()) {
            IsoResult res;
            res.iso = false;
            res.first_fail_degree = d;
            std::ostringstream w;
            w << "dim mismatch in degree " << d << ": source " << src_basis.size() << ", target("
              << sd << ") " << tgt_basis.size();
            res.detail = w.str();
            return res;
        }
        if (src_basis.empty())
            continue;
        Gf2Matrix m(src_basis.size(), tgt_basis.size());
        for (std::size_t r = 0; r < src_basis.size(); ++r) {
            const Polynomial image = f.apply(Polynomial({src_basis[r]}));
            if (image.is_zero())
                continue;
            if (!tgt.is_homogeneous(image) || tgt.degree(image) != sd) {
                // happens only for maps that fail check_map; report rather
                // than throw so verification can continue
                IsoResult res;
                res.iso = false;
                res.first_fail_degree = d;
                res.detail = "image of a degree-" + std::to_string(d) +
                             " basis element is not homogeneous of degree " + std::to_string(sd);
                return res;
            }
            for (std::size_t c : tgt.coords(image, sd))
                m.set(r, c);
        }
        if (m.rank() != tgt_basis.size()) {
            IsoResult res;
            res.iso = false;
            res.first_fail_degree = d;
            res.detail = "images do not span the target in degree " + std::to_string(d);
            return res;
        }
    }
    return {};
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
    if (!f.target().same_presentation(g.source()))
        throw AlgebraError("compose: inner target differs from outer source");
    DegreeScale scale;
    if (f.scale() == DegreeScale::full && g.scale() == DegreeScale::full)
        scale = DegreeScale::full;
    else if (f.scale() == DegreeScale::half && g.scale() == DegreeScale::half)
        throw AlgebraError("compose: quarter-degree maps are not representable");
    else
        scale = DegreeScale::half;
    std::vector<Polynomial> images;
    images.reserve(f.images().size());
    for (const Polynomial& im : f.images())
        images.push_back(g.apply(im));
    return AlgebraMap(f.source(), g.target(), scale, std::move(images));
}

} // namespace conjtk
