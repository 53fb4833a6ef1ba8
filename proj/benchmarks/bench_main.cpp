#include <benchmark/benchmark.h>

#include "quintrank/fieldscan.hpp"
#include "quintrank/poly_modp.hpp"
#include "quintrank/standard_rep.hpp"

using namespace quintrank;

namespace {

const IntPolynomial kBrumer = IntPolynomial::from_descending({1, 0, 0, 0, -1, -1});

void BM_FactorPattern(benchmark::State& state) {
  const auto& primes = small_primes();
  std::size_t i = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_pattern_mod_p(kBrumer, primes[i]));
    if (++i == primes.size()) i = 100;
  }
}
BENCHMARK(BM_FactorPattern);

void BM_Discriminant(benchmark::State& state) {
  const IntPolynomial f = IntPolynomial::from_descending({1, -6, 5, 4, -3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(poly_discriminant(f));
}
BENCHMARK(BM_Discriminant);

void BM_CertifyS5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_s5(kBrumer));
}
BENCHMARK(BM_CertifyS5);

void BM_TensorInduction(benchmark::State& state) {
  const PinDoubleCover cover = pin_double_cover(5);
  const Representation rho = quaternion_model(cover, icosian_group());
  for (auto _ : state) benchmark::DoNotOptimize(tensor_induction(cover.cosets, rho));
}
BENCHMARK(BM_TensorInduction)->Unit(benchmark::kMillisecond);

void BM_PinCocycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pin_cocycle_sn(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PinCocycle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateHeight(benchmark::State& state) {
  EnumerationOptions opt;
  opt.height = state.range(0);
  opt.disc_bound = 50'000;
  opt.threads = 1;
  const FieldBuilder builder;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quintics(opt, builder));
}
BENCHMARK(BM_EnumerateHeight)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
