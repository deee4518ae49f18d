#include <benchmark/benchmark.h>

#include "bpistego/bench.hpp"
#include "bpistego/metrics.hpp"
#include "bpistego/schemes.hpp"
#include "bpistego/selection.hpp"
#include "bpistego/steganalysis.hpp"

using namespace bpistego;

namespace {

const GrayImage& cover512() {
  static const GrayImage cover = synth_cover(CoverKind::kSmooth, 512, 512, 1);
  return cover;
}

void BM_SelectPositions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_positions({42}, n, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SelectPositions)->Arg(1 << 16)->Arg(1 << 18);

void BM_Embed(benchmark::State& state) {
  const auto scheme = static_cast<SchemeId>(state.range(0));
  const auto& cover = cover512();
  const auto msg = generate_message(7, cover.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(cover, msg, scheme, 9));
  }
  state.SetLabel(std::string(scheme_token(scheme)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(msg.size()));
}
BENCHMARK(BM_Embed)->DenseRange(0, 2);

void BM_WeightedStego(benchmark::State& state) {
  const auto& cover = cover512();
  const int plane = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlsb_ws_estimate(cover, plane));
  }
}
BENCHMARK(BM_WeightedStego)->Arg(0)->Arg(1);

void BM_PovCurve(benchmark::State& state) {
  const auto& cover = cover512();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pov_curve(cover, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PovCurve)->Arg(10)->Arg(100);

void BM_Psnr(benchmark::State& state) {
  const auto& cover = cover512();
  const auto stego =
      embed(cover, generate_message(3, cover.size()), SchemeId::kBpi, 4).stego;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psnr(cover, stego));
  }
}
BENCHMARK(BM_Psnr);

}  // namespace

BENCHMARK_MAIN();
