#include <benchmark/benchmark.h>

#include "ramacf/algid.hpp"
#include "ramacf/cfrac.hpp"
#include "ramacf/hypergeom.hpp"
#include "ramacf/numerics.hpp"
#include "ramacf/qseries.hpp"

using namespace ramacf;

namespace {

BigReal nome_epi(long bits) { return exp(-BigReal::pi(bits)); }

void PochhammerInf(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal q = nome_epi(ctx.internal_bits());
  for (auto _ : state) {
    BigReal v = pochhammer_inf(q, q, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(PochhammerInf)->Arg(256)->Arg(512)->Arg(1024);

void RRProduct(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal q = nome_epi(ctx.internal_bits());
  for (auto _ : state) {
    BigReal v = product_form(rr_product_spec(), q, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(RRProduct)->Arg(256)->Arg(512)->Arg(1024);

void RRContinuedFraction(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal q = BigReal::parse("0.3", ctx.internal_bits());
  for (auto _ : state) {
    BigReal v = rr_value_cf(q, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(RRContinuedFraction)->Arg(256)->Arg(512);

void Theta3(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal q = nome_epi(ctx.internal_bits());
  for (auto _ : state) {
    BigReal v = theta3(q, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(Theta3)->Arg(256)->Arg(1024);

void TanhSinhPolynomial(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  for (auto _ : state) {
    BigReal v = integrate(
        [](const BigReal& x, const PrecisionContext&) { return pow(x, 10L); },
        BigReal(ctx.internal_bits()), BigReal::of(1L, ctx.internal_bits()), ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(TanhSinhPolynomial)->Arg(128)->Arg(256);

void Gauss2F1(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal z = glasser_argument(ctx.internal_bits());
  for (auto _ : state) {
    BigReal v = gauss_2f1({1, 6}, {1, 6}, 1, z, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(Gauss2F1)->Arg(256)->Arg(512);

void MinPolyGolden(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  BigReal phi = ldexp(sqrt(BigReal::of(5L, 4 * state.range(0))) + 1, -1);
  for (auto _ : state) {
    AlgebraicCandidate cand = min_poly(phi, 2, ctx);
    benchmark::DoNotOptimize(cand.degree);
  }
}
BENCHMARK(MinPolyGolden)->Arg(128)->Arg(256);

void MinPolyRRDegree8(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  PrecisionContext big(4 * state.range(0));
  BigReal value = product_form(rr_product_spec(), nome_epi(big.internal_bits()), big);
  for (auto _ : state) {
    AlgebraicCandidate cand = min_poly(value, 8, ctx);
    benchmark::DoNotOptimize(cand.degree);
  }
}
BENCHMARK(MinPolyRRDegree8)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
