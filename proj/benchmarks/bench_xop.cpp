#include <benchmark/benchmark.h>

#include "xop/detrep.hpp"
#include "xop/moments.hpp"
#include "xop/verify.hpp"

using namespace xop;

namespace {

FamilyDescriptor family_for(int which) {
  switch (which) {
    case 0: return make_family(FamilyKind::laguerre_I, 1.5);
    case 1: return make_family(FamilyKind::laguerre_III, -0.25);
    default: return make_family(FamilyKind::jacobi, 2.0, 4.0);
  }
}

void BM_GenerateMoments(benchmark::State& state) {
  const FamilyDescriptor f = family_for(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate_moments(f, n));
}
BENCHMARK(BM_GenerateMoments)->ArgsProduct({{0, 1, 2}, {12, 40}});

void BM_RecursionOnly(benchmark::State& state) {
  const FamilyDescriptor f = family_for(2);
  wide_real a = 0.3, b = -0.4;
  int k = 1;
  for (auto _ : state) {
    const wide_real c = recursion_step(f.recursion, k, a, b);
    a = b;
    b = c;
    if (++k > 40) {
      k = 1;
      a = 0.3;
      b = -0.4;
    }
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_RecursionOnly);

void BM_QuadratureMoment(benchmark::State& state) {
  const FamilyDescriptor f = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moment_by_quadrature(f, 6));
}
BENCHMARK(BM_QuadratureMoment)->DenseRange(0, 2);

void BM_ExceptionalPolynomial(benchmark::State& state) {
  const FamilyDescriptor f = family_for(2);
  const int n = static_cast<int>(state.range(0));
  const MomentTable mu = generate_moments(f, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(exceptional_polynomial(f, n, mu));
}
BENCHMARK(BM_ExceptionalPolynomial)->DenseRange(2, 10, 2);

void BM_GramSchmidt(benchmark::State& state) {
  const FamilyDescriptor f = family_for(2);
  const int n = static_cast<int>(state.range(0));
  const MomentTable mu = generate_moments(f, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt_polynomial(f, n, mu));
}
BENCHMARK(BM_GramSchmidt)->DenseRange(2, 8, 3);

void BM_VerifyFamily(benchmark::State& state) {
  const FamilyDescriptor f = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(f));
}
BENCHMARK(BM_VerifyFamily)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
