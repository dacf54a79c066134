#include "conjcore/constructors.hpp"
#include "conjcore/hamiltonian.hpp"

#include <benchmark/benchmark.h>

using namespace conjtk;

namespace {

HamiltonianData projective_data(int n, int cutoff) {
    HamiltonianData data;
    data.rank = 1;
    for (int j = 0; j <= n; ++j) {
        FixedComponent fc{"p" + std::to_string(j), point_frame(cutoff), {Rational(j)}, {}};
        for (int i = 0; i <= n; ++i)
            if (i != j)
                fc.weights.push_back({{static_cast<long long>(i - j)}, 1});
        data.components.push_back(std::move(fc));
    }
    return data;
}

void BM_MorseAssembly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamiltonianData data = projective_data(n, 2 * n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(morse_series(data, {1}, 2 * n).halves);
    }
}
BENCHMARK(BM_MorseAssembly)->Arg(2)->Arg(4)->Arg(6);

void BM_TwKernel(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    GradedAlgebra shell = GradedAlgebra::free_algebra({{"a", 2}, {"t", 2}}, cutoff);
    const GradedAlgebra alg =
        GradedAlgebra::presented({{"a", 2}, {"t", 2}}, {shell.parse("a^3 + a*t^2")}, cutoff);
    const GradedAlgebra point_ring = GradedAlgebra::free_algebra({{"t", 2}}, cutoff);
    GradedAlgebra line_shell = GradedAlgebra::free_algebra({{"h", 2}, {"t", 2}}, cutoff);
    const GradedAlgebra line_ring =
        GradedAlgebra::presented({{"h", 2}, {"t", 2}}, {line_shell.parse("h^2")}, cutoff);
    EquivariantPresentation pres{alg, 1, {}};
    pres.restrictions.push_back(
        {"p0", {Rational(0)},
         AlgebraMap(alg, point_ring, DegreeScale::full, {point_ring.zero(), point_ring.gen(0)})});
    pres.restrictions.push_back(
        {"F1", {Rational(1)},
         AlgebraMap(alg, line_ring, DegreeScale::full,
                    {line_ring.parse("h + t"), line_ring.gen(1)})});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            tw_kernel(pres, {{1}, {-1}}, {Rational(1, 2)}, std::nullopt).kernel.at(cutoff));
    }
}
BENCHMARK(BM_TwKernel)->Arg(8)->Arg(16)->Arg(24);

} // namespace
