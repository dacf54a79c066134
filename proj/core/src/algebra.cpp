#include "conjcore/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace conjtk {

struct GradedAlgebra::Impl {
    std::vector<Generator> gens;
    std::vector<int> wts;
    std::map<std::string, int, std::less<>> index;
    std::vector<Polynomial> relations;
    int cutoff = 0;
    AlgebraOptions opts;

    std::vector<Polynomial> gb;
    std::vector<Monomial> gb_leads;

    // basis[d] = standard monomials of weighted degree d, sorted.
    std::vector<std::vector<Monomial>> bases;

    bool mono_less(const Monomial& a, const Monomial& b) const {
        const int da = a.weighted_degree(wts);
        const int db = b.weighted_degree(wts);
        if (da != db)
            return da < db;
        // Ties: the monomial with the smaller exponent at the first
        // difference is the larger one (reversed-listing grevlex).
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != b.exps[i])
                return a.exps[i] > b.exps[i];
        return false;
    }

    const Monomial& leading(const Polynomial& p) const {
        assert(!p.is_zero());
        std::size_t best = 0;
        for (std::size_t i = 1; i < p.monos.size(); ++i)
            if (mono_less(p.monos[best], p.monos[i]))
                best = i;
        return p.monos[best];
    }

    Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis,
                      const std::vector<Monomial>& leads) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Monomial& m : p.monos) {
                for (std::size_t g = 0; g < basis.size(); ++g) {
                    if (basis[g].is_zero())
                        continue;
                    if (mono_divides(leads[g], m)) {
                        const Monomial q = mono_div(m, leads[g]);
                        p = poly_add(p, poly_mul_mono(basis[g], q));
                        changed = true;
                        break;
                    }
                }
                if (changed)
                    break;
            }
        }
        return p;
    }

    void build_groebner() {
        struct Pair {
            int deg;
            std::size_t i, j;
            bool operator<(const Pair& o) const {
                return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
            }
        };

        std::vector<Polynomial> basis;
        std::vector<Monomial> leads;
        std::set<Pair> pairs;
        long long steps = 0;

        auto add_element = [&](Polynomial p) {
            const Monomial lead = leading(p);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (basis[i].is_zero())
                    continue;
                const Monomial l = mono_lcm(lead, leads[i]);
                const int d = l.weighted_degree(wts);
                if (d <= cutoff && !mono_coprime(lead, leads[i]))
                    pairs.insert({d, i, basis.size()});
            }
            basis.push_back(std::move(p));
            leads.push_back(lead);
        };

        for (const Polynomial& r : relations) {
            if (r.is_zero() || degree_of(r) > cutoff)
                continue;
            Polynomial red = reduce(r, basis, leads);
            if (!red.is_zero())
                add_element(std::move(red));
        }

        while (!pairs.empty()) {
            const Pair pr = *pairs.begin();
            pairs.erase(pairs.begin());
            if (++steps > opts.reduction_limit)
                throw CutoffError("groebner: reduction budget exhausted below the cutoff");
            if (basis[pr.i].is_zero() || basis[pr.j].is_zero())
                continue;
            const Monomial l = mono_lcm(leads[pr.i], leads[pr.j]);
            Polynomial s = poly_add(poly_mul_mono(basis[pr.i], mono_div(l, leads[pr.i])),
                                    poly_mul_mono(basis[pr.j], mono_div(l, leads[pr.j])));
            s = reduce(std::move(s), basis, leads);
            if (!s.is_zero())
                add_element(std::move(s));
        }

        // Minimalize: drop elements whose lead another lead divides.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero())
                continue;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || basis[j].is_zero())
                    continue;
                if (mono_divides(leads[j], leads[i]) &&
                    !(leads[j] == leads[i] && j > i)) {
                    basis[i] = Polynomial();
                    break;
                }
            }
        }

        // Tail-reduce survivors against each other.
        std::vector<Polynomial> minimal;
        std::vector<Monomial> minimal_leads;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!basis[i].is_zero()) {
                minimal.push_back(basis[i]);
                minimal_leads.push_back(leads[i]);
            }
        std::vector<Polynomial> reduced(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> other_leads;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) {
                    others.push_back(minimal[j]);
                    other_leads.push_back(minimal_leads[j]);
                }
            reduced[i] = reduce(minimal[i], others, other_leads);
        }

        std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
            return mono_less(leading(a), leading(b));
        });
        gb = std::move(reduced);
        gb_leads.clear();
        for (const Polynomial& g : gb)
            gb_leads.push_back(leading(g));
    }

    int degree_of(const Polynomial& p) const {
        int d = -1;
        for (const Monomial& m : p.monos)
            d = std::max(d, m.weighted_degree(wts));
        return d;
    }

    bool standard(const Monomial& m) const {
        for (const Monomial& l : gb_leads)
            if (mono_divides(l, m))
                return false;
        return true;
    }

    void enumerate_basis() {
        bases.assign(cutoff + 1, {});
        Monomial current(gens.size());
        walk(current, 0, 0);
        for (auto& layer : bases)
            std::sort(layer.begin(), layer.end());
    }

    void walk(Monomial& current, std::size_t gen_idx, int degree_so_far) {
        // Exponents only grow along the walk, so any completion of a partial
        // monomial divisible by a basis lead stays divisible.
        if (!standard(current))
            return;
        if (gen_idx == gens.size()) {
            bases[degree_so_far].push_back(current);
            return;
        }
        const int w = wts[gen_idx];
        for (int e = 0; degree_so_far + e * w <= cutoff; ++e) {
            current.exps[gen_idx] = e;
            walk(current, gen_idx + 1, degree_so_far + e * w);
            if (w == 0)
                break; // defensive; degree-0 generators are rejected upstream
        }
        current.exps[gen_idx] = 0;
    }
};

GradedAlgebra::GradedAlgebra(int cutoff) {
    auto impl = std::make_shared<Impl>();
    impl->cutoff = cutoff;
    impl->enumerate_basis();
    impl_ = std::move(impl);
}

GradedAlgebra GradedAlgebra::free_algebra(std::vector<Generator> gens, int cutoff,
                                          AlgebraOptions opts) {
    return presented(std::move(gens), {}, cutoff, opts);
}

GradedAlgebra GradedAlgebra::presented(std::vector<Generator> gens,
                                       std::vector<Polynomial> relations, int cutoff,
                                       AlgebraOptions opts) {
    if (cutoff < 0)
        throw AlgebraError("cutoff must be nonnegative");
    auto impl = std::make_shared<Impl>();
    impl->cutoff = cutoff;
    impl->opts = opts;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree <= 0)
            throw AlgebraError("generator " + gens[i].name + " must have positive degree");
        if (impl->index.count(gens[i].name))
            throw AlgebraError("duplicate generator name " + gens[i].name);
        impl->index[gens[i].name] = static_cast<int>(i);
        impl->wts.push_back(gens[i].degree);
    }
    impl->gens = std::move(gens);
    for (Polynomial& r : relations) {
        if (r.is_zero())
            continue;
        int d = -1;
        for (const Monomial& m : r.monos) {
            if (m.exps.size() != impl->gens.size())
                throw AlgebraError("relation monomial has wrong arity");
            const int md = m.weighted_degree(impl->wts);
            if (d < 0)
                d = md;
            else if (d != md)
                throw AlgebraError("relation is not homogeneous");
        }
        if (d == 0)
            throw AlgebraError("degree-0 relation collapses the ring");
        impl->relations.push_back(std::move(r));
    }
    impl->build_groebner();
    impl->enumerate_basis();
    return GradedAlgebra(std::move(impl));
}

int GradedAlgebra::cutoff() const { return impl_->cutoff; }
std::size_t GradedAlgebra::ngens() const { return impl_->gens.size(); }
const std::vector<Generator>& GradedAlgebra::generators() const { return impl_->gens; }
const std::vector<int>& GradedAlgebra::weights() const { return impl_->wts; }

int GradedAlgebra::generator_index(std::string_view name) const {
    auto it = impl_->index.find(name);
    return it == impl_->index.end() ? -1 : it->second;
}

const std::vector<Polynomial>& GradedAlgebra::relations() const { return impl_->relations; }
const std::vector<Polynomial>& GradedAlgebra::groebner_basis() const { return impl_->gb; }

int GradedAlgebra::degree(const Monomial& m) const { return m.weighted_degree(impl_->wts); }
int GradedAlgebra::degree(const Polynomial& p) const { return impl_->degree_of(p); }

bool GradedAlgebra::is_homogeneous(const Polynomial& p) const {
    if (p.is_zero())
        return true;
    const int d = degree(p.monos.front());
    for (const Monomial& m : p.monos)
        if (degree(m) != d)
            return false;
    return true;
}

Polynomial GradedAlgebra::component(const Polynomial& p, int d) const {
    std::vector<Monomial> out;
    for (const Monomial& m : p.monos)
        if (degree(m) == d)
            out.push_back(m);
    return Polynomial(std::move(out));
}

bool GradedAlgebra::mono_less(const Monomial& a, const Monomial& b) const {
    return impl_->mono_less(a, b);
}

const Monomial& GradedAlgebra::leading(const Polynomial& p) const { return impl_->leading(p); }

Polynomial GradedAlgebra::normal_form(Polynomial p) const {
    const int d = degree(p);
    if (d > impl_->cutoff)
        throw DegreeError("normal_form: degree " + std::to_string(d) + " above cutoff " +
                          std::to_string(impl_->cutoff));
    return impl_->reduce(std::move(p), impl_->gb, impl_->gb_leads);
}

Polynomial GradedAlgebra::add(const Polynomial& a, const Polynomial& b) const {
    // Normal forms are closed under addition.
    return poly_add(a, b);
}

Polynomial GradedAlgebra::mul(const Polynomial& a, const Polynomial& b) const {
    const int da = degree(a);
    const int db = degree(b);
    if (da >= 0 && db >= 0 && da + db > impl_->cutoff)
        throw DegreeError("mul: product degree above cutoff");
    return normal_form(poly_mul_raw(a, b));
}

Polynomial GradedAlgebra::pow(const Polynomial& a, int e) const {
    Polynomial r = one();
    for (int i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

Polynomial GradedAlgebra::one() const {
    return Polynomial(std::vector<Monomial>{Monomial(impl_->gens.size())});
}

Polynomial GradedAlgebra::gen(std::size_t i) const {
    Monomial m(impl_->gens.size());
    m.exps[i] = 1;
    return Polynomial(std::vector<Monomial>{m});
}

Series GradedAlgebra::hilbert() const {
    std::vector<std::int64_t> c(impl_->cutoff + 1, 0);
    for (int d = 0; d <= impl_->cutoff; ++d)
        c[d] = static_cast<std::int64_t>(impl_->bases[d].size());
    return Series(std::move(c));
}

const std::vector<Monomial>& GradedAlgebra::basis(int d) const {
    static const std::vector<Monomial> kEmpty;
    if (d < 0 || d > impl_->cutoff)
        return kEmpty;
    return impl_->bases[d];
}

std::vector<std::size_t> GradedAlgebra::coords(const Polynomial& p, int d) const {
    const auto& layer = basis(d);
    std::vector<std::size_t> out;
    out.reserve(p.monos.size());
    for (const Monomial& m : p.monos) {
        assert(degree(m) == d);
        auto it = std::lower_bound(layer.begin(), layer.end(), m);
        if (it == layer.end() || !(*it == m))
            throw AlgebraError("coords: monomial not in normal form basis");
        out.push_back(static_cast<std::size_t>(it - layer.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

} // namespace

Polynomial GradedAlgebra::parse(std::string_view text) const {
    std::vector<Monomial> monos;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };

    skip_ws();
    if (i == n)
        return Polynomial(); // empty input is the zero polynomial
    while (true) {
        // one term: factor ('*' factor)*
        Monomial m(impl_->gens.size());
        bool zero_term = false;
        while (true) {
            skip_ws();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
                const std::string digits(text.substr(i, j - i));
                if (digits == "0")
                    zero_term = true;
                else if (digits != "1")
                    throw ParseError("unexpected coefficient '" + digits + "' (field has two elements)");
                i = j;
            } else {
                std::size_t j = i;
                while (j < n && ident_char(text[j]))
                    ++j;
                if (j == i)
                    throw ParseError("expected generator name at position " + std::to_string(i));
                const std::string name(text.substr(i, j - i));
                const int gi = generator_index(name);
                if (gi < 0)
                    throw ParseError("unknown generator '" + name + "'");
                i = j;
                int exp = 1;
                skip_ws();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t k = i;
                    while (k < n && std::isdigit(static_cast<unsigned char>(text[k])))
                        ++k;
                    if (k == i)
                        throw ParseError("expected exponent after '^'");
                    exp = std::stoi(std::string(text.substr(i, k - i)));
                    i = k;
                }
                m.exps[gi] += exp;
            }
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!zero_term)
            monos.push_back(m);
        skip_ws();
        if (i < n && text[i] == '+') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i != n)
        throw ParseError("trailing input at position " + std::to_string(i));
    return Polynomial(std::move(monos));
}

std::string GradedAlgebra::format(const Monomial& m) const {
    if (m.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i])
            continue;
        if (!first)
            os << '*';
        os << impl_->gens[i].name;
        if (m.exps[i] > 1)
            os << '^' << m.exps[i];
        first = false;
    }
    return os.str();
}

std::string GradedAlgebra::format(const Polynomial& p) const {
    if (p.is_zero())
        return "0";
    std::vector<Monomial> monos = p.monos;
    std::sort(monos.begin(), monos.end(),
              [&](const Monomial& a, const Monomial& b) { return impl_->mono_less(b, a); });
    std::ostringstream os;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (i)
            os << " + ";
        os << format(monos[i]);
    }
    return os.str();
}

bool GradedAlgebra::same_presentation(const GradedAlgebra& other) const {
    return impl_->gens == other.impl_->gens && impl_->cutoff == other.impl_->cutoff &&
           impl_->relations == other.impl_->relations;
}

Polynomial embed(const Polynomial& p, const std::vector<std::size_t>& gen_map,
                 std::size_t target_ngens) {
    std::vector<Monomial> out;
    out.reserve(p.monos.size());
    for (const Monomial& m : p.monos) {
        Monomial t(target_ngens);
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            t.exps[gen_map[i]] += m.exps[i];
        out.push_back(std::move(t));
    }
    return Polynomial(std::move(out));
}

TensorResult tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
    std::vector<Generator> gens = a.generators();
    std::set<std::string> used;
    for (const Generator& g : gens)
        used.insert(g.name);
    for (const Generator& g : b.generators()) {
        std::string name = g.name;
        while (used.count(name))
            name += '\'';
        used.insert(name);
        gens.push_back({name, g.degree});
    }

    const std::size_t na = a.ngens();
    const std::size_t nb = b.ngens();
    std::vector<std::size_t> left(na), right(nb);
    for (std::size_t i = 0; i < na; ++i)
        left[i] = i;
    for (std::size_t j = 0; j < nb; ++j)
        right[j] = na + j;

    std::vector<Polynomial> rels;
    for (const Polynomial& r : a.relations())
        rels.push_back(embed(r, left, na + nb));
    for (const Polynomial& r : b.relations())
        rels.push_back(embed(r, right, na + nb));

    const int cutoff = std::min(a.cutoff(), b.cutoff());
    return {GradedAlgebra::presented(std::move(gens), std::move(rels), cutoff), std::move(left),
            std::move(right)};
}

} // namespace conjtk
