#include "conjcore/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace conjtk {

bool Monomial::is_one() const {
    for (int e : exps)
        if (e)
            return false;
    return true;
}

int Monomial::total_exponent() const {
    int t = 0;
    for (int e : exps)
        t += e;
    return t;
}

int Monomial::weighted_degree(const std::vector<int>& weights) const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += exps[i] * weights[i];
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        r.exps[i] = a.exps[i] - b.exps[i];
        assert(r.exps[i] >= 0);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i])
            return false;
    return true;
}

Monomial mono_pow(const Monomial& a, int e) {
    Monomial r(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] = a.exps[i] * e;
    return r;
}

Polynomial::Polynomial(std::vector<Monomial> ms) : monos(std::move(ms)) {
    std::sort(monos.begin(), monos.end());
    // Pairs cancel over the two-element field.
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monos.size();) {
        std::size_t j = i;
        while (j < monos.size() && monos[j] == monos[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(monos[i]);
        i = j;
    }
    monos = std::move(out);
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    std::set_symmetric_difference(a.monos.begin(), a.monos.end(), b.monos.begin(), b.monos.end(),
                                  std::back_inserter(r.monos));
    return r;
}

Polynomial poly_mul_mono(const Polynomial& a, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(a.monos.size());
    for (const Monomial& x : a.monos)
        out.push_back(mono_mul(x, m));
    return Polynomial(std::move(out));
}

Polynomial poly_mul_raw(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const Monomial& m : b.monos)
        r = poly_add(r, poly_mul_mono(a, m));
    return r;
}

} // namespace conjtk
