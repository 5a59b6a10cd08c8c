#include "psdrank/bounds.hpp"
#include "psdrank/fixtures.hpp"
#include "psdrank/linalg.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/rationality.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace psdrank;

void BM_rat_rank_cuboid(benchmark::State& state) {
    const RatMatrix m = fixtures::cuboid_slack();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rat_rank(m));
    }
}
BENCHMARK(BM_rat_rank_cuboid);

void BM_rad_rank_all_plus_sqrt(benchmark::State& state) {
    const RadMatrix s = SqrtCandidate::nonnegative(fixtures::cuboid_slack()).entries;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rad_rank(s));
    }
}
BENCHMARK(BM_rad_rank_all_plus_sqrt);

void BM_squarefree_part(benchmark::State& state) {
    const Rational value(2 * 3 * 3 * 5 * 7 * 7 * 11, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(squarefree_part(value));
    }
}
BENCHMARK(BM_squarefree_part);

void BM_radscalar_inverse(benchmark::State& state) {
    const RadScalar a = RadScalar(1) + RadScalar::sqrt_of(2) + RadScalar::radical(Rational(1, 3), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_radscalar_inverse);

void BM_sqrt_rank_min_cuboid(benchmark::State& state) {
    const RatMatrix m = fixtures::cuboid_slack();
    SqrtRankBudget budget;
    budget.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqrt_rank_min(m, budget));
    }
}
BENCHMARK(BM_sqrt_rank_min_cuboid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_irrationality_certificate_cuboid(benchmark::State& state) {
    const RatMatrix m = fixtures::cuboid_slack();
    for (auto _ : state) {
        benchmark::DoNotOptimize(no_rational_factorization_certificate(m));
    }
}
BENCHMARK(BM_irrationality_certificate_cuboid)->Unit(benchmark::kMillisecond);

void BM_facets_bruteforce_cuboid(benchmark::State& state) {
    const Polytope p = fixtures::cuboid_polytope();
    for (auto _ : state) {
        benchmark::DoNotOptimize(facets_bruteforce(p));
    }
}
BENCHMARK(BM_facets_bruteforce_cuboid);

}  // namespace

BENCHMARK_MAIN();
