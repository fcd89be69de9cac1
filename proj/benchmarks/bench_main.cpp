#include <benchmark/benchmark.h>

#include "qz/expr.hpp"
#include "qz/forms.hpp"
#include "qz/lattice.hpp"
#include "qz/posets.hpp"
#include "qz/quiver.hpp"
#include "qz/series.hpp"

namespace {

void bm_sublattice_enum(benchmark::State& state) {
    const int e = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long seen = 0;
        qz::for_each_sublattice(3, 2, e, [&](const qz::LocalLattice&) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(bm_sublattice_enum)->Arg(3)->Arg(5)->Arg(7);

void bm_count_heisenberg(benchmark::State& state) {
    const qz::Representation rep = qz::builtin_rep("heisenberg");
    qz::CountOptions opts;
    opts.bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        qz::CountTable t = qz::count_subreps(rep, 2, opts);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_count_heisenberg)->Arg(4)->Arg(6);

void bm_series_expand(benchmark::State& state) {
    const qz::RationalFn f = qz::builtin_formula("heisenberg");
    for (auto _ : state) {
        qz::PowerSeries s = qz::series_expand(f, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_series_expand)->Arg(12)->Arg(24);

void bm_poly_pow(benchmark::State& state) {
    const qz::RationalFn base = qz::expr::parse_rational("1+q*t1+t2+q^2*t1*t2", 2);
    for (auto _ : state) {
        qz::RationalFn p = base.pow(static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_poly_pow)->Arg(4)->Arg(8);

void bm_q_multinomial(benchmark::State& state) {
    for (auto _ : state) {
        qz::IntPoly m = qz::q_multinomial_descent(6, {2, 4});
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(bm_q_multinomial);

}  // namespace

BENCHMARK_MAIN();
