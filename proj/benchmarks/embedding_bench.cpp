#include <benchmark/benchmark.h>

#include <string>

#include "interlace/embedding.hpp"

namespace {

using interlace::Rational;

// Points i/2 on a line, a metric whose aspect ratio grows with n.
interlace::FiniteMetric line_metric(std::size_t n) {
  std::vector<std::string> labels;
  interlace::DistanceMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto gap = static_cast<std::int64_t>(i > j ? i - j : j - i);
      d[i][j] = Rational(gap, 2);
    }
  }
  return interlace::validate_metric(std::move(labels), std::move(d));
}

void BM_Embed(benchmark::State& state) {
  const auto m = line_metric(static_cast<std::size_t>(state.range(0)));
  const Rational eps(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(interlace::embed(m, eps));
}
BENCHMARK(BM_Embed)->ArgsProduct({{4, 8, 16}, {2, 10}})->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto m = line_metric(static_cast<std::size_t>(state.range(0)));
  const Rational eps(1, 4);
  const auto r = interlace::embed(m, eps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interlace::verify_embedding(m, r, static_cast<unsigned>(state.range(1))));
  }
}
BENCHMARK(BM_Verify)->ArgsProduct({{8, 16}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
