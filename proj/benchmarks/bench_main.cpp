#include <benchmark/benchmark.h>

#include <cstdint>

#include "edrb/channel.hpp"
#include "edrb/errors.hpp"
#include "edrb/multihop.hpp"
#include "edrb/onehop.hpp"
#include "edrb/routing.hpp"
#include "edrb/topology.hpp"

namespace {

const edrb::DerivedConstants& consts() {
  static const edrb::DerivedConstants c = edrb::derive_constants(edrb::RadioParameters{});
  return c;
}

void BM_NakagamiQuadrature(benchmark::State& state) {
  const edrb::ChannelSpec ch = edrb::ChannelSpec::nakagami(static_cast<double>(state.range(0)) / 2.0);
  double g = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(edrb::link_probability(ch, 2560, g, edrb::LinkMode::kExact));
    g = g < 100.0 ? g * 1.01 : 5.0;
  }
}
BENCHMARK(BM_NakagamiQuadrature)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ClosedFormOptimum(benchmark::State& state) {
  const edrb::ChannelSpec ch = edrb::ChannelSpec::nakagami(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(edrb::operating_point(consts(), ch));
}
BENCHMARK(BM_ClosedFormOptimum);

void BM_NumericOptimum(benchmark::State& state) {
  const edrb::ChannelSpec ch = state.range(0) == 0 ? edrb::ChannelSpec::awgn() : edrb::ChannelSpec::nakagami(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(edrb::numeric_optimum(consts(), ch));
}
BENCHMARK(BM_NumericOptimum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CharacteristicRange(benchmark::State& state) {
  const edrb::ChannelSpec ch = edrb::ChannelSpec::nakagami(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(edrb::characteristic_range(consts(), ch));
}
BENCHMARK(BM_CharacteristicRange)->Unit(benchmark::kMicrosecond);

void BM_GreedyRoute(benchmark::State& state) {
  const double density = static_cast<double>(state.range(0)) * 1e-4;
  const edrb::Topology topo = edrb::generate(density, 2000.0, 7);
  const auto routing = edrb::GreedyRouting::prepare(consts(), edrb::ChannelSpec::nakagami(1.0));
  std::uint64_t k = 0;
  for (auto _ : state) {
    const std::size_t a = (k * 2654435761u) % topo.size();
    const std::size_t b = (k * 40503u + 17) % topo.size();
    ++k;
    if (a == b) continue;
    try {
      benchmark::DoNotOptimize(edrb::route_energy_greedy(topo, a, b, routing));
    } catch (const edrb::Error&) {
    }
  }
  state.counters["nodes"] = static_cast<double>(topo.size());
}
BENCHMARK(BM_GreedyRoute)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
