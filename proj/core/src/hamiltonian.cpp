#include "conjcore/hamiltonian.hpp"

#include "conjcore/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace conjtk {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const boost::bad_rational&) {
        throw HamiltonianError("bad rational '" + text + "'");
    } catch (const std::exception&) {
        throw HamiltonianError("bad rational '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << '/' << r.denominator();
    return os.str();
}

namespace {

long long pair_weight(const std::vector<long long>& chi, const std::vector<long long>& xi) {
    long long s = 0;
    for (std::size_t i = 0; i < chi.size(); ++i)
        s += chi[i] * xi[i];
    return s;
}

Rational pair_moment(const std::vector<Rational>& mu, const std::vector<long long>& xi) {
    Rational s(0);
    for (std::size_t i = 0; i < mu.size(); ++i)
        s += mu[i] * Rational(xi[i]);
    return s;
}

void validate_rank(const HamiltonianData& data, const std::vector<long long>& xi) {
    if (static_cast<int>(xi.size()) != data.rank)
        throw HamiltonianError("direction has wrong rank");
    for (const FixedComponent& f : data.components) {
        if (static_cast<int>(f.moment.size()) != data.rank)
            throw HamiltonianError("component " + f.name + " has a moment value of wrong rank");
        for (const IsotropyWeight& w : f.weights) {
            if (static_cast<int>(w.chi.size()) != data.rank)
                throw HamiltonianError("component " + f.name + " has a weight of wrong rank");
            if (w.multiplicity <= 0)
                throw HamiltonianError("weight multiplicities must be positive");
            bool zero = true;
            for (long long c : w.chi)
                if (c)
                    zero = false;
            if (zero)
                throw HamiltonianError("component " + f.name + " carries a zero isotropy weight");
        }
    }
}

} // namespace

DirectionCheck generic_direction(const HamiltonianData& data, const std::vector<long long>& xi) {
    validate_rank(data, xi);
    for (const FixedComponent& f : data.components)
        for (const IsotropyWeight& w : f.weights)
            if (pair_weight(w.chi, xi) == 0) {
                std::ostringstream os;
                os << "direction annihilates weight (";
                for (std::size_t i = 0; i < w.chi.size(); ++i)
                    os << (i ? "," : "") << w.chi[i];
                os << ") at component " << f.name;
                return {false, os.str()};
            }
    for (std::size_t i = 0; i < data.components.size(); ++i)
        for (std::size_t j = i + 1; j < data.components.size(); ++j) {
            const auto& fi = data.components[i];
            const auto& fj = data.components[j];
            if (fi.moment == fj.moment)
                continue;
            if (pair_moment(fi.moment, xi) == pair_moment(fj.moment, xi)) {
                return {false, "direction does not separate the moment values of " + fi.name +
                                   " and " + fj.name};
            }
        }
    return {};
}

MorseSeriesResult morse_series(const HamiltonianData& data, const std::vector<long long>& xi,
                               int cutoff) {
    const DirectionCheck check = generic_direction(data, xi);
    if (!check.generic)
        throw DegenerateDirection(check.witness);

    // Components in increasing moment pairing, mirroring the sublevel
    // filtration; the assembled sum is order independent.
    std::vector<std::size_t> order(data.components.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pair_moment(data.components[a].moment, xi) <
               pair_moment(data.components[b].moment, xi);
    });

    MorseSeriesResult out;
    out.total = Series::zero();
    out.real_locus = Series::zero();
    out.indices.assign(data.components.size(), 0);
    for (std::size_t idx : order) {
        const FixedComponent& f = data.components[idx];
        int lambda = 0;
        for (const IsotropyWeight& w : f.weights)
            if (pair_weight(w.chi, xi) < 0)
                lambda += w.multiplicity;
        out.indices[idx] = 2 * lambda;
        out.total = out.total + f.frame.even_ring().hilbert().shifted(2 * lambda);
        out.real_locus = out.real_locus + f.frame.fixed_ring().hilbert().shifted(lambda);
    }
    out.total = out.total.truncated(cutoff);
    out.real_locus = out.real_locus.truncated(cutoff);
    out.halves = Series::halving(out.total, out.real_locus, cutoff);
    return out;
}

bool xi_independence(const HamiltonianData& data, const std::vector<long long>& xi1,
                     const std::vector<long long>& xi2, int cutoff) {
    const MorseSeriesResult a = morse_series(data, xi1, cutoff);
    const MorseSeriesResult b = morse_series(data, xi2, cutoff);
    return a.total == b.total && a.real_locus == b.real_locus;
}

std::vector<TwoTorsionHit> two_torsion_scan(const HamiltonianData& data) {
    std::vector<TwoTorsionHit> hits;
    for (std::size_t c = 0; c < data.components.size(); ++c) {
        const auto& weights = data.components[c].weights;
        for (std::size_t w = 0; w < weights.size(); ++w) {
            bool all_even = true;
            bool nonzero = false;
            for (long long x : weights[w].chi) {
                if (x % 2)
                    all_even = false;
                if (x)
                    nonzero = true;
            }
            if (all_even && nonzero)
                hits.push_back({c, w});
        }
    }
    return hits;
}

bool mt2_check(const HamiltonianData& data) { return two_torsion_scan(data).empty(); }

EquivariantSeriesResult equivariant_series(const HamiltonianData& data,
                                           const std::vector<long long>& xi, int cutoff) {
    const MorseSeriesResult morse = morse_series(data, xi, cutoff);
    EquivariantSeriesResult out;
    out.torus = morse.total;
    out.two_torus = morse.real_locus;
    for (int i = 0; i < data.rank; ++i) {
        out.torus = convolve(out.torus, Series::geometric(2, cutoff), cutoff);
        out.two_torus = convolve(out.two_torus, Series::geometric(1, cutoff), cutoff);
    }
    out.halves = Series::halving(out.torus, out.two_torus, cutoff);
    return out;
}

Report check_presentation(const EquivariantPresentation& pres) {
    Report rep;
    const GradedAlgebra& alg = pres.algebra;

    bool maps_ok = true;
    std::string witness;
    for (const PresRestriction& r : pres.restrictions) {
        if (!r.map.source().same_presentation(alg)) {
            maps_ok = false;
            witness = "restriction at " + r.point + " has the wrong source";
            break;
        }
        const Report mr = check_map(r.map);
        if (!mr.all_pass()) {
            maps_ok = false;
            witness = "restriction at " + r.point + " is not well defined";
            break;
        }
    }
    rep.add("presentation-restrictions", maps_ok, witness);
    if (!maps_ok)
        return rep;

    bool injective = true;
    std::string inj_witness;
    for (int d = 0; d <= alg.cutoff() && injective; ++d) {
        const auto& basis = alg.basis(d);
        if (basis.empty())
            continue;
        std::size_t total_cols = 0;
        std::vector<std::size_t> offsets;
        for (const PresRestriction& r : pres.restrictions) {
            offsets.push_back(total_cols);
            total_cols += r.map.target().basis(d).size();
        }
        Gf2Matrix m(basis.size(), total_cols);
        for (std::size_t row = 0; row < basis.size(); ++row)
            for (std::size_t ri = 0; ri < pres.restrictions.size(); ++ri) {
                const auto& map = pres.restrictions[ri].map;
                const Polynomial im = map.target().normal_form(map.apply(Polynomial({basis[row]})));
                if (im.is_zero())
                    continue;
                for (std::size_t c : map.target().coords(im, d))
                    m.set(row, offsets[ri] + c);
            }
        if (!left_kernel(m).empty()) {
            injective = false;
            inj_witness = "joint restriction has a kernel in degree " + std::to_string(d);
        }
    }
    rep.add("presentation-injective", injective, inj_witness);
    return rep;
}

TwKernelResult tw_kernel(const EquivariantPresentation& pres,
                         const std::vector<std::vector<long long>>& xi_set,
                         const std::vector<Rational>& mu,
                         const std::optional<Series>& real_reduced_series) {
    const GradedAlgebra& alg = pres.algebra;
    if (static_cast<int>(mu.size()) != pres.rank)
        throw HamiltonianError("mu has wrong rank");
    for (const auto& xi : xi_set)
        if (static_cast<int>(xi.size()) != pres.rank)
            throw HamiltonianError("direction has wrong rank");

    for (const auto& xi : xi_set)
        for (const PresRestriction& r : pres.restrictions) {
            std::vector<Rational> diff;
            for (std::size_t i = 0; i < mu.size(); ++i)
                diff.push_back(r.moment[i] - mu[i]);
            if (pair_moment(diff, xi) == Rational(0))
                throw WallError("mu lies on the wall through " + r.point);
        }

    const Report pres_report = check_presentation(pres);
    if (!pres_report.all_pass())
        throw HamiltonianError("presentation rejected: joint restriction not injective or maps ill-defined");

    TwKernelResult out;
    out.report = pres_report;
    const int cutoff = alg.cutoff();
    out.kernel_basis.resize(cutoff + 1);

    auto sublevel = [&](const std::vector<long long>& xi) {
        std::vector<std::size_t> selected;
        for (std::size_t ri = 0; ri < pres.restrictions.size(); ++ri) {
            std::vector<Rational> diff;
            for (std::size_t i = 0; i < mu.size(); ++i)
                diff.push_back(pres.restrictions[ri].moment[i] - mu[i]);
            if (pair_moment(diff, xi) < Rational(0))
                selected.push_back(ri);
        }
        return selected;
    };

    std::vector<std::int64_t> kernel_dims(cutoff + 1, 0);
    for (int d = 0; d <= cutoff; ++d) {
        const auto& basis = alg.basis(d);
        if (basis.empty())
            continue;
        // The per-direction kernels are ideals, so their degreewise sum
        // already spans the degree-d piece of the generated ideal.
        Gf2Span kernel_span(basis.size());
        auto record = [&](const std::vector<std::size_t>& combo) {
            if (!kernel_span.insert_support(combo))
                return;
            std::vector<Monomial> ms;
            for (std::size_t row : combo)
                ms.push_back(basis[row]);
            out.kernel_basis[d].push_back(Polynomial(std::move(ms)));
        };
        for (const auto& xi : xi_set) {
            const std::vector<std::size_t> selected = sublevel(xi);
            if (selected.empty()) {
                // Vanishing on nothing is no condition: everything lies in
                // the kernel for this direction.
                for (std::size_t row = 0; row < basis.size(); ++row)
                    record({row});
                continue;
            }
            std::size_t total_cols = 0;
            std::vector<std::size_t> offsets;
            for (std::size_t ri : selected) {
                offsets.push_back(total_cols);
                total_cols += pres.restrictions[ri].map.target().basis(d).size();
            }
            Gf2Matrix m(basis.size(), total_cols);
            for (std::size_t row = 0; row < basis.size(); ++row)
                for (std::size_t s = 0; s < selected.size(); ++s) {
                    const auto& map = pres.restrictions[selected[s]].map;
                    const Polynomial im =
                        map.target().normal_form(map.apply(Polynomial({basis[row]})));
                    if (im.is_zero())
                        continue;
                    for (std::size_t c : map.target().coords(im, d))
                        m.set(row, offsets[s] + c);
                }
            for (const auto& combo : left_kernel(m))
                record(combo);
        }
        kernel_dims[d] = static_cast<std::int64_t>(kernel_span.dim());
    }

    std::vector<std::int64_t> kcoeffs(cutoff + 1, 0), rcoeffs(cutoff + 1, 0);
    const Series h = alg.hilbert();
    for (int d = 0; d <= cutoff; ++d) {
        kcoeffs[d] = kernel_dims[d];
        rcoeffs[d] = h.at(d) - kernel_dims[d];
    }
    out.kernel = Series(std::move(kcoeffs));
    out.reduced = Series(std::move(rcoeffs));

    if (real_reduced_series) {
        out.halving_verdict = Series::halving(out.reduced, *real_reduced_series, cutoff) ? 1 : 0;
        out.report.add("reduction-halving", out.halving_verdict == 1,
                       out.halving_verdict == 1 ? ""
                                                : "reduced series does not halve against the "
                                                  "supplied real-locus series");
    } else {
        out.report.add("reduction-halving", true,
                       "no real-locus reduction series supplied; series reported only");
    }
    return out;
}

} // namespace conjtk
