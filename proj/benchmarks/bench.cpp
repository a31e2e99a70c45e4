#include "curvop/algebra_io.hpp"
#include "curvop/algebra.hpp"
#include "curvop/checks.hpp"
#include "curvop/linalg.hpp"
#include "curvop/slices.hpp"
#include "curvop/twisting.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace curvop;

static void BM_ComposeSymmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Element x = eta(Mode::symmetric, n, 2);
    const Element y = Element::generator(Mode::symmetric, ell_generator(3));
    for (auto _ : state)
        for (int i = 1; i <= x.arity(); ++i) benchmark::DoNotOptimize(compose(x, i, y));
}
BENCHMARK(BM_ComposeSymmetric)->DenseRange(1, 3);

static void BM_PresetSquareZero(benchmark::State& state) {
    const PresetKind kind = state.range(0) == 0 ? PresetKind::cAinf : PresetKind::cLinf;
    const int arity = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_preset(kind, arity));
}
BENCHMARK(BM_PresetSquareZero)->Args({0, 5})->Args({1, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyEta(benchmark::State& state) {
    const Mode mode = state.range(0) == 0 ? Mode::nonsymmetric : Mode::symmetric;
    const int bound = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_eta(mode, bound, bound));
}
BENCHMARK(BM_VerifyEta)->Args({0, 3})->Args({1, 2})->Unit(benchmark::kMillisecond);

static void BM_ConstructUnit(benchmark::State& state) {
    const int precision = static_cast<int>(state.range(0));
    const CurvObject q = curv_preset(PresetKind::cAinf, 3 + precision + 2);
    const Presentation p = underlying_presentation(q);
    const Morphism id = identity_morphism(p);
    for (auto _ : state) benchmark::DoNotOptimize(construct_unit(q, p, id, precision, 3));
}
BENCHMARK(BM_ConstructUnit)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_KernelRank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c(rng) > 0) m(i, j) = Rational(c(rng), 1 + (c(rng) & 1));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_rank(m));
}
BENCHMARK(BM_KernelRank)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

static void BM_DTHomology(benchmark::State& state) {
    const Mode mode = state.range(0) == 0 ? Mode::nonsymmetric : Mode::symmetric;
    for (auto _ : state) benchmark::DoNotOptimize(dT_homology(mode, 3, 3));
}
BENCHMARK(BM_DTHomology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TwistSquareZero(benchmark::State& state) {
    const AlgebraStructure s = load_algebra_manifest(CURVOP_DATA_DIR "/square_zero.json");
    const AlgElement a = s.elements.at("non_mc");
    for (auto _ : state) benchmark::DoNotOptimize(twist_algebra(s, a));
}
BENCHMARK(BM_TwistSquareZero)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
