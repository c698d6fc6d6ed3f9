#include <benchmark/benchmark.h>

#include "prin/derive.hpp"
#include "prin/monomial.hpp"
#include "prin/orchestrate.hpp"

namespace {

prin::Ideal whitney() {
  auto r = prin::make_ring({"x", "y", "z"});
  return prin::Ideal(r, {prin::parse_polynomial("x^2 - y^2*z", r)});
}

void BM_GroebnerTunedCone(benchmark::State& state) {
  auto r = prin::make_ring({"x", "y", "z"});
  prin::Ideal cone(r, {prin::parse_polynomial("x^2 + y^3 - z^6", r)});
  for (auto _ : state) {
    prin::Ideal w = prin::tune(cone, 2);
    benchmark::DoNotOptimize(w.groebner_basis());
  }
}
BENCHMARK(BM_GroebnerTunedCone);

void BM_MaxOrder(benchmark::State& state) {
  prin::Ideal ideal = whitney();
  for (auto _ : state) {
    benchmark::DoNotOptimize(prin::max_order(ideal));
  }
}
BENCHMARK(BM_MaxOrder);

void BM_TuneW6(benchmark::State& state) {
  auto r = prin::make_ring({"y", "z"});
  prin::Ideal ideal(r, {prin::parse_polynomial("y^2*z", r),
                        prin::parse_polynomial("y^4", r)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(prin::tune(ideal, 6));
  }
}
BENCHMARK(BM_TuneW6);

void BM_ReduceMonomial(benchmark::State& state) {
  auto arr = prin::make_arrangement(
      3,
      {{"E1", 7}, {"E2", 5}, {"E3", 9}},
      {{0, 1, 2}});
  for (auto _ : state) {
    auto [final_arr, trace] = prin::reduce_monomial(arr, 4);
    benchmark::DoNotOptimize(final_arr.divisors.size());
    benchmark::DoNotOptimize(trace.moves.size());
  }
}
BENCHMARK(BM_ReduceMonomial);

void BM_PrincipalizeCone(benchmark::State& state) {
  auto r = prin::make_ring({"x", "y", "z"});
  prin::Chart root(r, prin::Ideal(r, {prin::parse_polynomial("x^2 + y^3 - z^6", r)}));
  for (auto _ : state) {
    prin::PrincipalizeReport report = prin::principalize(root);
    benchmark::DoNotOptimize(report.certificates.size());
  }
}
BENCHMARK(BM_PrincipalizeCone);

} // namespace

BENCHMARK_MAIN();
