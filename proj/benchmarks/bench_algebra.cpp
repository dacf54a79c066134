#include "conjcore/constructors.hpp"

#include <benchmark/benchmark.h>

using namespace conjtk;

namespace {

void BM_GroebnerGrassmannian(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const int cutoff = 2 * k * (n - k);
    for (auto _ : state) {
        const ConjugationFrame f = grassmannian_frame(k, n, cutoff);
        benchmark::DoNotOptimize(f.even_ring().groebner_basis().size());
    }
}
BENCHMARK(BM_GroebnerGrassmannian)->Args({2, 4})->Args({2, 5})->Args({3, 6});

void BM_NormalForm(benchmark::State& state) {
    const ConjugationFrame gr = grassmannian_frame(2, 5, 14);
    const GradedAlgebra& A = gr.even_ring();
    const Polynomial p = A.parse("c1^3*c2 + cb1*cb2^2 + c1*c2*cb1^2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(A.normal_form(p));
    }
}
BENCHMARK(BM_NormalForm);

void BM_Hilbert(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const ConjugationFrame bt = bt_frame(r, 16);
        benchmark::DoNotOptimize(bt.fixed_ring().hilbert().at(16));
    }
}
BENCHMARK(BM_Hilbert)->Arg(1)->Arg(2)->Arg(3);

} // namespace
