#include <benchmark/benchmark.h>

#include <memory>

#include "stickel/characters.hpp"
#include "stickel/kernels.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

const GroupTable& big_group() {
  static const GroupTable g = parse_group_spec("perm:6:(1 2),(1 2 3 4 5 6)");
  return g;
}

std::shared_ptr<const GroupTable> table_group() {
  static const auto g = std::make_shared<const GroupTable>(parse_group_spec("abelian:4,12"));
  return g;
}

void BM_ElementOrdersSerial(benchmark::State& st) {
  const CayleyTable& t = big_group().cayley();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::element_orders_serial(t));
}
void BM_ElementOrders(benchmark::State& st) {
  const CayleyTable& t = big_group().cayley();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::element_orders(t));
}

void BM_ClassMinimaSerial(benchmark::State& st) {
  const CayleyTable& t = big_group().cayley();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::class_minima_serial(t));
}
void BM_ClassMinima(benchmark::State& st) {
  const CayleyTable& t = big_group().cayley();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::class_minima(t));
}

void BM_MultiplicitiesSerial(benchmark::State& st) {
  const CharacterTable t = table_for_group(table_group());
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::irreducible_multiplicities_serial(t.classes(), t.irreducibles()));
}
void BM_Multiplicities(benchmark::State& st) {
  const CharacterTable t = table_for_group(table_group());
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::irreducible_multiplicities(t.classes(), t.irreducibles()));
}

void BM_GcdClaimSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gcd_claim_failures_serial(2, 10000));
}
void BM_GcdClaim(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gcd_claim_failures(2, 10000));
}

void BM_IntegralityTallySerial(benchmark::State& st) {
  const CharacterTable t =
      table_for_group(std::make_shared<const GroupTable>(parse_group_spec("metacyclic:7,3,2")));
  const auto batch = random_virtual_characters(t.num_irreducibles(), 200, 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::integrality_tally_serial(t, batch));
}
void BM_IntegralityTally(benchmark::State& st) {
  const CharacterTable t =
      table_for_group(std::make_shared<const GroupTable>(parse_group_spec("metacyclic:7,3,2")));
  const auto batch = random_virtual_characters(t.num_irreducibles(), 200, 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::integrality_tally(t, batch));
}

}  // namespace

BENCHMARK(BM_ElementOrdersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElementOrders)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassMinimaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassMinima)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultiplicitiesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiplicities)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GcdClaimSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GcdClaim)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IntegralityTallySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegralityTally)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
