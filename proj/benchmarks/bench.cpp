#include <benchmark/benchmark.h>

#include "fqmzv/anderson_thakur.hpp"
#include "fqmzv/format.hpp"
#include "fqmzv/mzv.hpp"

#include <random>

using namespace fqmzv;

namespace {

Poly dense_poly(const Fq& F, int deg, uint64_t seed) {
    std::mt19937_64 g(seed);
    std::vector<FqElem> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(F.elem((uint32_t)(g() % (uint64_t)F.q())));
    cs.push_back(F.one()); // keep the degree fixed
    Poly p{cs};
    p.normalize();
    return p;
}

void BM_poly_mul(benchmark::State& state) {
    Fq F(2, 1);
    int deg = (int)state.range(0);
    Poly a = dense_poly(F, deg, 1);
    Poly b = dense_poly(F, deg, 2);
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul(F, a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_poly_mul)->Range(64, 4096)->Complexity();

void BM_vadic_mul(benchmark::State& state) {
    Fq F(2, 1);
    Place v = make_place(F, parse_poly_theta(F, "T^2+T+1"));
    LocalField K(F, v);
    int64_t prec = state.range(0);
    VAdic a = K.from_poly(dense_poly(F, (int)(2 * prec), 3), prec);
    VAdic b = K.from_poly(dense_poly(F, (int)(2 * prec), 4), prec);
    for (auto _ : state) benchmark::DoNotOptimize(K.mul(a, b));
}
BENCHMARK(BM_vadic_mul)->Range(8, 512);

void BM_vadic_inv(benchmark::State& state) {
    Fq F(3, 1);
    Place v = make_place(F, parse_poly_theta(F, "T"));
    LocalField K(F, v);
    int64_t prec = state.range(0);
    VAdic a = K.from_poly(dense_poly(F, (int)prec, 5), prec);
    for (auto _ : state) benchmark::DoNotOptimize(K.inv(a));
}
BENCHMARK(BM_vadic_inv)->Range(8, 512);

void BM_at_poly(benchmark::State& state) {
    Fq F(2, 1);
    int n = (int)state.range(0);
    for (auto _ : state) {
        // fresh tables each round: the polynomial family is memoized
        CarlitzTable tab(F);
        AndersonThakur at(tab);
        benchmark::DoNotOptimize(at.h_poly(n));
    }
}
BENCHMARK(BM_at_poly)->DenseRange(4, 12, 4);

void BM_golden_zeta(benchmark::State& state) {
    Fq F(2, 1);
    Place v = make_place(F, parse_poly_theta(F, "T"));
    for (auto _ : state) {
        Evaluator E(F);
        LocalField K(F, v);
        benchmark::DoNotOptimize(E.zeta_v(K, {{4, 1}}, state.range(0)));
    }
}
BENCHMARK(BM_golden_zeta)->Arg(10)->Arg(20)->Arg(40);

void BM_zeta_inf(benchmark::State& state) {
    Fq F(2, 1);
    InfField KI(F);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_inf_series(KI, {{2, 1}}, state.range(0)));
}
BENCHMARK(BM_zeta_inf)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
