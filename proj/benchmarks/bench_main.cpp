#include <benchmark/benchmark.h>

#include <random>

#include "pfaffcubic/pipeline.hpp"
#include "pfaffcubic/roots.hpp"

namespace {

using namespace pfc;

LinearMatrix random_skew(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    LinearMatrix m;
    for (int v = 0; v < 4; ++v) {
        for (int i = 0; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j) {
                BigComplex c(d(rng), d(rng));
                m.coefficient_matrix(v)[i][j] = c;
                m.coefficient_matrix(v)[j][i] = -c;
            }
        }
    }
    return m;
}

void BM_pfaffian_symbolic(benchmark::State& state) {
    LinearMatrix m = random_skew(11);
    for (auto _ : state) {
        MultiPoly pf = pfaffian_symbolic(m);
        benchmark::DoNotOptimize(pf);
    }
}
BENCHMARK(BM_pfaffian_symbolic);

void BM_det_symbolic(benchmark::State& state) {
    LinearMatrix m = random_skew(13);
    for (auto _ : state) {
        MultiPoly det = det_symbolic(m);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_det_symbolic);

void BM_roots_univariate(benchmark::State& state) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    std::vector<BigComplex> coeffs;
    for (int k = 0; k <= 9; ++k) coeffs.push_back(BigComplex::from_double(d(rng), d(rng)));
    for (auto _ : state) {
        auto roots = roots_univariate(coeffs);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_roots_univariate);

void BM_weierstrass_reduce(benchmark::State& state) {
    TernaryCubic slice = slice_y0(parse_cubic("x^3+2*x*z^2+z^3-t^2*z+x^2*z"));
    for (auto _ : state) {
        CanonicalTernary ct = weierstrass_reduce(slice);
        benchmark::DoNotOptimize(ct);
    }
}
BENCHMARK(BM_weierstrass_reduce);

void BM_represent_irreducible(benchmark::State& state) {
    CubicSurface c = parse_cubic("x^3+y^3+z^3+t^3+x*y*t");
    for (auto _ : state) {
        PipelineResult r = represent(c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_represent_irreducible);

void BM_represent_plane_split(benchmark::State& state) {
    CubicSurface c = parse_cubic("z*(x^2+t^2+z^2)");
    for (auto _ : state) {
        PipelineResult r = represent(c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_represent_plane_split);

void BM_certify(benchmark::State& state) {
    CubicSurface c = parse_cubic("x^3+y^3+z^3+t^3");
    PipelineResult r = represent(c);
    for (auto _ : state) {
        Certificate cert = certify(r.rep.m, c);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_certify);

}  // namespace

BENCHMARK_MAIN();
