#include "conjcore/symmetric.hpp"

#include <algorithm>

namespace conjtk {

namespace {

// e_j(x_1..x_k) expanded in the free ring on k variables.
Polynomial elementary_poly(int k, int j) {
    std::vector<Monomial> monos;
    std::vector<int> pick(j);
    // enumerate j-subsets of {0..k-1}
    for (int i = 0; i < j; ++i)
        pick[i] = i;
    if (j == 0)
        return Polynomial({Monomial(static_cast<std::size_t>(k))});
    while (true) {
        Monomial m(static_cast<std::size_t>(k));
        for (int i : pick)
            m.exps[i] = 1;
        monos.push_back(std::move(m));
        int i = j - 1;
        while (i >= 0 && pick[i] == k - j + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int l = i + 1; l < j; ++l)
            pick[l] = pick[l - 1] + 1;
    }
    return Polynomial(std::move(monos));
}

const Monomial& lex_leading(const Polynomial& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.monos.size(); ++i)
        if (p.monos[best].exps < p.monos[i].exps)
            best = i;
    return p.monos[best];
}

} // namespace

std::vector<Monomial> elementary_reduce(const GradedAlgebra& xring, Polynomial f) {
    const int k = static_cast<int>(xring.ngens());
    std::vector<Polynomial> e(k + 1);
    for (int j = 0; j <= k; ++j)
        e[j] = elementary_poly(k, j);

    std::vector<Monomial> out;
    long long guard = 0;
    while (!f.is_zero()) {
        if (++guard > 1'000'000)
            throw AlgebraError("elementary_reduce: did not terminate");
        const Monomial lead = lex_leading(f);
        Monomial nu(static_cast<std::size_t>(k));
        Polynomial prod({Monomial(static_cast<std::size_t>(k))});
        for (int j = 0; j < k; ++j) {
            const int next = (j + 1 < k) ? lead.exps[j + 1] : 0;
            if (lead.exps[j] < next)
                throw AlgebraError("elementary_reduce: input is not symmetric (lead " +
                                   xring.format(lead) + ")");
            nu.exps[j] = lead.exps[j] - next;
            for (int rep = 0; rep < nu.exps[j]; ++rep)
                prod = poly_mul_raw(prod, e[j + 1]);
        }
        f = poly_add(f, prod);
        out.push_back(std::move(nu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::vector<Monomial>>> splitting_expansion(int k) {
    GradedAlgebra xring = GradedAlgebra::free_algebra(
        [&] {
            std::vector<Generator> gens;
            for (int i = 1; i <= k; ++i)
                gens.push_back({"x" + std::to_string(i), 1});
            return gens;
        }(),
        2 * k + 1);

    // coeffs[s] = coefficient of u^s in prod_j (1 + x_j u + x_j^2).
    std::vector<Polynomial> coeffs{xring.one()};
    for (int j = 0; j < k; ++j) {
        std::vector<Polynomial> next(coeffs.size() + 1);
        const Polynomial xj = xring.gen(static_cast<std::size_t>(j));
        const Polynomial xj2 = poly_mul_raw(xj, xj);
        const Polynomial one_plus_sq = poly_add(xring.one(), xj2);
        for (std::size_t s = 0; s < coeffs.size(); ++s) {
            next[s] = poly_add(next[s], poly_mul_raw(coeffs[s], one_plus_sq));
            next[s + 1] = poly_add(next[s + 1], poly_mul_raw(coeffs[s], xj));
        }
        coeffs = std::move(next);
    }

    std::vector<std::vector<std::vector<Monomial>>> pieces(k + 1);
    for (int i = 0; i <= k; ++i) {
        pieces[i].resize(i + 1);
        for (int s = 0; s <= i; ++s) {
            if (s >= static_cast<int>(coeffs.size()))
                continue;
            const Polynomial part = xring.component(coeffs[s], 2 * i - s);
            if (!part.is_zero())
                pieces[i][s] = elementary_reduce(xring, part);
        }
    }
    return pieces;
}

} // namespace conjtk
