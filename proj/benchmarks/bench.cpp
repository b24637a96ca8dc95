// Copyright 2026 the nevk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nevk/groebner.hpp"
#include "nevk/newton.hpp"
#include "nevk/piecewise.hpp"

namespace {

using namespace nevk;

MultiForm var(int nvars, int i) { return MultiForm::variable(nvars, i); }

void BM_BuchbergerConic(benchmark::State& state) {
  MultiForm q = var(3, 0) * var(3, 2) - var(3, 1) * var(3, 1);
  for (auto _ : state) {
    auto gb = buchberger({q}, 3, false);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerConic);

void BM_BuchbergerTwistedCubic(benchmark::State& state) {
  std::vector<MultiForm> gens = {
      var(4, 0) * var(4, 2) - var(4, 1) * var(4, 1),
      var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2),
      var(4, 1) * var(4, 3) - var(4, 2) * var(4, 2)};
  for (auto _ : state) {
    auto gb = buchberger(gens, 4, false);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerTwistedCubic);

void BM_GaussNormEnvelope(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-1000, 1000);
  std::vector<std::pair<long, Rat>> coeffs;
  for (long j = 0; j < state.range(0); ++j)
    coeffs.emplace_back(j, Rat(c(rng) | 1));
  Series f = Series::fromCoefficients(std::move(coeffs));
  Int p(2);
  for (auto _ : state) {
    PiecewiseLinear g = gaussNormPL(f, p);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GaussNormEnvelope)->Arg(16)->Arg(128)->Arg(1024);

void BM_PlMax(benchmark::State& state) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-50, 50);
  auto envelope = [&](int n) {
    std::vector<Line> lines;
    for (int i = 0; i < n; ++i)
      lines.push_back(Line{Rat(c(rng)), Rat(c(rng))});
    return PiecewiseLinear::upperEnvelope(std::move(lines));
  };
  PiecewiseLinear f = envelope(static_cast<int>(state.range(0)));
  PiecewiseLinear g = envelope(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PiecewiseLinear m = plMax(f, g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_PlMax)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
