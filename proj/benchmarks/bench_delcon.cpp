// Copyright 2026 The delcon authors
//
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

#include "delcon/builtins.hpp"
#include "delcon/graph_game.hpp"
#include "delcon/solve_delay.hpp"

namespace {

void BM_SolveDelayGame(benchmark::State& state) {
  auto dg = delcon::builtin_dg("ex26", {static_cast<int>(state.range(0))});
  for (auto _ : state) {
    auto r = delcon::solve_delay_game(dg, /*want_machine=*/false);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolveDelayGame)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

delcon::GraphGame random_parity_game(int n, int colors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  delcon::GraphGame g;
  g.kind = delcon::AcceptanceKind::Parity;
  for (int i = 0; i < n; ++i)
    g.add_vertex("v" + std::to_string(i), static_cast<int>(rng() % 2));
  for (int i = 0; i < n; ++i) {
    g.color[i] = static_cast<int>(rng() % colors);
    int deg = 1 + static_cast<int>(rng() % 3);
    for (int d = 0; d < deg; ++d)
      g.succ[i].push_back({static_cast<int>(rng() % n), -1});
  }
  return g;
}

void BM_Zielonka(benchmark::State& state) {
  auto g = random_parity_game(static_cast<int>(state.range(0)), 4, 7);
  for (auto _ : state) {
    auto sol = delcon::solve(g);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_Zielonka)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
