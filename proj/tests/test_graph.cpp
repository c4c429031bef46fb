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

#include <doctest.h>

#include <random>

#include "delcon/graph_game.hpp"
#include "delcon/matrix_game.hpp"
#include "delcon/transforms.hpp"
#include "helpers.hpp"

using namespace delcon;
using namespace delcon::testutil;

namespace {

GraphGame random_graph_game(std::mt19937& rng, int max_vertices = 6) {
  GraphGame g;
  int n = pick(rng, 2, max_vertices);
  for (int v = 0; v < n; ++v)
    g.add_vertex("v" + std::to_string(v), pick(rng, 0, 1));
  g.initial = 0;
  for (int v = 0; v < n; ++v) {
    int deg = pick(rng, 1, 3);
    for (int d = 0; d < deg; ++d) g.succ[v].push_back({pick(rng, 0, n - 1), -1});
  }
  int kind = pick(rng, 0, 2);
  g.kind = kind == 0   ? AcceptanceKind::Safety
           : kind == 1 ? AcceptanceKind::Reachability
                       : AcceptanceKind::Parity;
  for (int v = 0; v < n; ++v) {
    g.marked.push_back(g.kind != AcceptanceKind::Parity && pick(rng, 0, 3) == 0);
    g.color.push_back(g.kind == AcceptanceKind::Parity ? pick(rng, 0, 3) : 0);
  }
  return g;
}

}  // namespace

TEST_CASE("solver matches the positional-enumeration oracle") {
  std::mt19937 rng(21);
  int compared = 0;
  for (int round = 0; round < 300; ++round) {
    GraphGame g = random_graph_game(rng);
    auto oracle = oracle_regions(g);
    if (oracle.empty()) continue;
    Solution sol = solve(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      CAPTURE(round);
      CAPTURE(v);
      REQUIRE(static_cast<bool>(oracle[v]) == (sol.winner[v] == 0));
    }
    ++compared;
  }
  CHECK(compared >= 250);
}

TEST_CASE("positional strategies stay inside the winning region") {
  std::mt19937 rng(22);
  for (int round = 0; round < 100; ++round) {
    GraphGame g = random_graph_game(rng);
    Solution sol = solve(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      int w = sol.winner[v];
      if (g.owner[v] != w) continue;
      REQUIRE(sol.strategy[v] >= 0);
      REQUIRE(sol.strategy[v] < static_cast<int>(g.succ[v].size()));
      CHECK(sol.winner[g.succ[v][sol.strategy[v]].to] == w);
    }
  }
}

TEST_CASE("attractor is sound and minimal on a chain") {
  GraphGame g;
  // v0 (P0) -> v1 (P1) -> v2, and v1 -> v0 as an escape.
  g.add_vertex("v0", 0);
  g.add_vertex("v1", 1);
  g.add_vertex("v2", 0);
  g.succ[0] = {{1, -1}};
  g.succ[1] = {{2, -1}, {0, -1}};
  g.succ[2] = {{2, -1}};
  g.kind = AcceptanceKind::Reachability;
  g.marked = {false, false, true};
  g.color = {0, 0, 0};
  auto att = attractor(g, 0, {false, false, true});
  CHECK(att.in == std::vector<char>{0, 0, 1});  // v1 escapes to v0
  auto att1 = attractor(g, 1, {false, false, true});
  CHECK(att1.in == std::vector<char>{1, 1, 1});
}

TEST_CASE("dc_to_condition recognizes exactly the winning pair plays") {
  std::mt19937 rng(23);
  for (int round = 0; round < 120; ++round) {
    DelayedControlGame g = random_dc_game(rng);
    OmegaAutomaton lang = dc_to_condition(g);
    for (int t = 0; t < 20; ++t) {
      int lu = pick(rng, 0, 3), lv = pick(rng, 1, 3);
      std::vector<std::pair<int, int>> u, v;
      std::vector<std::string> uw, vw;
      int ncl = static_cast<int>(g.arena.cletters.size());
      int nel = static_cast<int>(g.arena.eletters.size());
      for (int i = 0; i < lu; ++i) {
        int a = pick(rng, 0, ncl - 1), b = pick(rng, 0, nel - 1);
        u.push_back({a, b});
        uw.push_back(pair_letter(g.arena.cletters[a], g.arena.eletters[b]));
      }
      for (int i = 0; i < lv; ++i) {
        int a = pick(rng, 0, ncl - 1), b = pick(rng, 0, nel - 1);
        v.push_back({a, b});
        vw.push_back(pair_letter(g.arena.cletters[a], g.arena.eletters[b]));
      }
      CAPTURE(round);
      REQUIRE(run_automaton(lang, uw, vw) == lasso_winner(g, u, v));
    }
  }
}

TEST_CASE("matrix solver on known games") {
  // Matching pennies.
  std::vector<std::vector<Rat>> pennies = {{1, 0}, {0, 1}};
  MatrixSolution s = solve_matrix_exact(pennies);
  CHECK(s.value == Rat(1, 2));
  CHECK(s.row == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});

  // Dominant row.
  std::vector<std::vector<Rat>> dom = {{Rat(1, 3), Rat(1, 2)}, {0, Rat(1, 4)}};
  CHECK(solve_matrix_exact(dom).value == Rat(1, 3));

  // Rock-paper-scissors in win-probability form.
  std::vector<std::vector<Rat>> rps = {{Rat(1, 2), 0, 1},
                                       {1, Rat(1, 2), 0},
                                       {0, 1, Rat(1, 2)}};
  CHECK(solve_matrix_exact(rps).value == Rat(1, 2));
}

TEST_CASE("matrix certificates and iterative sandwich on random matrices") {
  std::mt19937 rng(24);
  for (int round = 0; round < 60; ++round) {
    int nr = pick(rng, 1, 4), nc = pick(rng, 1, 4);
    std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc));
    for (auto& row : m)
      for (auto& x : row) x = Rat(pick(rng, 0, 8), 8);
    MatrixSolution s = solve_matrix_exact(m);
    // The minimax certificate: each profile secures the value.
    CHECK(best_response_value_col(m, s.row) == s.value);
    CHECK(best_response_value_row(m, s.col) == s.value);
    Rat sum_r = 0, sum_c = 0;
    for (const auto& x : s.row) {
      CHECK(x >= 0);
      sum_r += x;
    }
    for (const auto& x : s.col) {
      CHECK(x >= 0);
      sum_c += x;
    }
    CHECK(sum_r == 1);
    CHECK(sum_c == 1);
    MatrixSandwich sw = solve_matrix_iterative(m, 200);
    CHECK(sw.lo <= s.value);
    CHECK(sw.hi >= s.value);
  }
}
