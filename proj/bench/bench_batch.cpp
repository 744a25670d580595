// Serial reference vs OpenMP sweeps over random phase-space samples.
// Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <vector>

#include "rolling/batch.hpp"
#include "rolling/sampling.hpp"

namespace {

using namespace rolling;

struct Workload {
  Scene scene;
  FullField field;
  std::vector<FullState> states;
};

Workload make_workload(std::size_t n) {
  const Scene scene = reference_scenes()[3].scene;  // ellipsoid on sphere
  Rng rng(7);
  std::vector<FullState> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) states.push_back(random_full_state(scene, rng));
  return Workload{scene, make_full_field(scene), std::move(states)};
}

void BM_FieldsSerial(benchmark::State& st) {
  const auto w = make_workload(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_fields_serial(w.field, w.states));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_FieldsParallel(benchmark::State& st) {
  const auto w = make_workload(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_fields(w.field, w.states));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_EnergyRatesSerial(benchmark::State& st) {
  const auto w = make_workload(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(energy_rates_serial(w.scene, w.field, w.states, 1e-6));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_EnergyRatesParallel(benchmark::State& st) {
  const auto w = make_workload(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(energy_rates(w.scene, w.field, w.states, 1e-6));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

BENCHMARK(BM_FieldsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_FieldsParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_EnergyRatesSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_EnergyRatesParallel)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
