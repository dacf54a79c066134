#include "conjcore/constructors.hpp"

#include <benchmark/benchmark.h>

using namespace conjtk;

namespace {

void BM_RestrictPower(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const ConjugationFrame cpi = projective_frame(kInfinite, 40);
    Monomial m(1);
    m.exps[0] = k;
    const Polynomial ak({m});
    for (auto _ : state) {
        benchmark::DoNotOptimize(restrict_class(cpi, ak).u_degree());
    }
}
BENCHMARK(BM_RestrictPower)->Arg(4)->Arg(8)->Arg(16);

void BM_VerifyFrame(benchmark::State& state) {
    const ConjugationFrame gr = grassmannian_frame(2, 5, 14);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_frame(gr).all_pass());
    }
}
BENCHMARK(BM_VerifyFrame);

void BM_InjectivityScan(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const ConjugationFrame bt = bt_frame(r, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_injectivity_r(bt).injective);
    }
}
BENCHMARK(BM_InjectivityScan)->Arg(1)->Arg(2);

void BM_ThomSpace(benchmark::State& state) {
    const ConjugationFrame cp3 = projective_frame(3, 8);
    const TauBundle hopf(cp3, 1, {cp3.even_ring().gen(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(thom_space_frame(hopf).even_ring().ngens());
    }
}
BENCHMARK(BM_ThomSpace);

} // namespace
