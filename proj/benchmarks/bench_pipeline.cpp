#include <benchmark/benchmark.h>

#include "igusa/algebra/parse.hpp"
#include "igusa/oracle.hpp"
#include "igusa/resolution.hpp"
#include "igusa/zeta.hpp"

namespace {

void BM_ResolveCusp(benchmark::State& state) {
  auto f = igusa::parse_polynomial("y^2 - x^3");
  for (auto _ : state) benchmark::DoNotOptimize(igusa::resolve({f}));
}
BENCHMARK(BM_ResolveCusp);

void BM_ResolveE8(benchmark::State& state) {
  auto f = igusa::parse_polynomial("y^3 - x^5");
  for (auto _ : state) benchmark::DoNotOptimize(igusa::resolve({f}));
}
BENCHMARK(BM_ResolveE8);

void BM_DenefCusp(benchmark::State& state) {
  auto g = igusa::resolve({igusa::parse_polynomial("y^2 - x^3")});
  long p = state.range(0);
  auto rg = igusa::reduce_mod_p(g, p);
  auto chi = igusa::CharacterTuple::trivial(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(igusa::denef_zeta(rg, chi, igusa::ResidualFunction::unit_ball()));
}
BENCHMARK(BM_DenefCusp)->Arg(7)->Arg(13)->Arg(31);

void BM_OracleCusp(benchmark::State& state) {
  std::vector<igusa::PolyQ> F{igusa::parse_polynomial("y^2 - x^3")};
  igusa::OracleOptions opt;
  opt.bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igusa::enumerate_histogram(F, 7, opt));
}
BENCHMARK(BM_OracleCusp)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
