#include <benchmark/benchmark.h>

#include <vector>

#include "censpred/model.hpp"
#include "censpred/regions.hpp"
#include "censpred/verify.hpp"

namespace {

using namespace censpred;

const GammaPrior pi0{};

void BM_PairPdfMixture(benchmark::State& state) {
  const SignedParetoMixture mix =
      predictive_pair(pi0, 35.79, 30, 20, 21, 30);
  double y = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mix.pdf_mixture(0.3, y));
    y += 1e-6;
  }
}
BENCHMARK(BM_PairPdfMixture);

void BM_PairPdfQuadrature(benchmark::State& state) {
  const SignedParetoMixture mix =
      predictive_pair(pi0, 35.79, 30, 20, 21, 30);
  double y = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mix.pdf_quadrature(0.3, y));
    y += 1e-6;
  }
}
BENCHMARK(BM_PairPdfQuadrature);

void BM_Beta2Quantile(benchmark::State& state) {
  const BetaTypeII w(2.0, 20.0);
  double p = 0.90;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.quantile(p));
    p = p >= 0.99 ? 0.90 : p + 1e-4;
  }
}
BENCHMARK(BM_Beta2Quantile);

void BM_Step2Slice(benchmark::State& state) {
  double y1 = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        step2_interval(pi0, 35.79, 30, 20, 21, 30, 0.05, y1));
    y1 = y1 >= 0.7 ? 0.1 : y1 + 1e-3;
  }
}
BENCHMARK(BM_Step2Slice);

void BM_BandBuild(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_band_region(pi0, 35.79, 30, 20, 21, 30, 0.05, grid));
}
BENCHMARK(BM_BandBuild)->Arg(64)->Arg(256);

void BM_CoverageTrial(benchmark::State& state) {
  std::uint64_t trial = 0;
  const BetaTypeII w(2.0, 20.0);
  const double c0 = w.quantile(0.95);
  for (auto _ : state) {
    Rng rng = Rng::substream(12345, trial++);
    const Experiment exp = simulate_experiment(30, 20, 1.0, rng);
    const double x = sufficient_statistic(exp.sample);
    const double z1 = exp.future[0] - exp.sample.values.back();
    const double z2 = exp.future[1] - exp.future[0];
    benchmark::DoNotOptimize(10.0 * z1 + 9.0 * z2 <= c0 * x);
  }
}
BENCHMARK(BM_CoverageTrial);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
