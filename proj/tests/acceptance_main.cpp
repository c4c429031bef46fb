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

// Acceptance checks, one line of output per criterion.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "delcon/builtins.hpp"
#include "delcon/io.hpp"
#include "delcon/randomized.hpp"
#include "delcon/solve_delay.hpp"
#include "delcon/transforms.hpp"
#include "helpers.hpp"

using namespace delcon;
using namespace delcon::testutil;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& run) {
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << "ACCEPTANCE " << n << " [" << what << "]: "
            << (ok ? "PASS" : "FAIL") << note << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "ex26 verdicts and minimal lookahead", [] {
    DelayGame g1 = builtin_dg("ex26", {1});
    DelaySolveResult r1 = solve_delay_game(g1);
    if (r1.winner != PlayerRole::PlayerI) return false;
    if (!r1.machine || !verify_strategy(g1, *r1.machine, PlayerRole::PlayerI).ok)
      return false;
    DelayGame g2 = builtin_dg("ex26", {2});
    DelaySolveResult r2 = solve_delay_game(g2);
    if (r2.winner != PlayerRole::PlayerO) return false;
    if (!r2.machine || !verify_strategy(g2, *r2.machine, PlayerRole::PlayerO).ok)
      return false;
    LookaheadSweep s = sweep_lookahead(builtin_dg("ex26", {0}), 4);
    return s.found && s.min_winning_k == 2;
  });

  criterion(2, "ex26 image chain under delayed control", [] {
    DgToDcResult t = dg_to_dc(builtin_dg("ex26", {1}));
    if (!solve_delayed_control(t.game, 2).controller_wins) return false;
    if (solve_delayed_control(t.game, 4).controller_wins) return false;
    DeltaSweep s = sweep_delta(t.game, 8);
    return s.verdict == DeltaSweep::Verdict::ThresholdInCap &&
           s.max_winning_delta == 2;
  });

  criterion(3, "fig4 pure and randomized suite", [] {
    DelayedControlGame g = builtin_dc("fig4_predict");
    if (!solve_delayed_control(g, 0).controller_wins) return false;
    if (solve_delayed_control(g, 2).controller_wins) return false;
    if (solve_environment(g).environment_wins) return false;
    if (classify_pure(g, 2) != PureVerdict::UndeterminedPure) return false;
    RandomizedClassification c = classify_randomized(g, 2, {3, false});
    return c.kind == RandomizedClassification::Kind::Value &&
           c.value && *c.value == Rat(1, 2);
  });

  criterion(4, "modular family values n/m", [] {
    for (auto [n, m] :
         std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 5}}) {
      DelayedControlGame g = builtin_dc("modular", {n, m});
      if (classify_pure(g, 0) != PureVerdict::EnvSure) return false;
      ValueReport v = normal_form_value(g, 2, {3, false});
      if (v.kind != ValueReport::Kind::Exact) return false;
      if (v.value() != Rat(n, m)) return false;
      if (1 - v.value() != Rat(m - n, m)) return false;
    }
    return true;
  });

  criterion(5, "mismatch(3) pinned to 7/8", [] {
    DelayedControlGame g = builtin_dc("mismatch", {3});
    HorizonPolicy hp{4, false};
    if (evaluate_guaranteed(g, 2, uniform_controller_machine(g, 2), hp).value() !=
        Rat(7, 8))
      return false;
    if (best_response_controller(g, 2, uniform_environment_machine(g), hp).hi !=
        Rat(7, 8))
      return false;
    return solve_delay_game(dc_to_delay_game(g, 2), false).winner ==
           PlayerRole::PlayerO;
  });

  criterion(6, "fig6 profile 1 - 2^-T", [] {
    DelayedControlGame g = builtin_dc("fig6_mismatch");
    std::vector<int> horizons;
    for (int t = 1; t <= 10; ++t) horizons.push_back(t);
    auto prof = value_profile(g, 2, uniform_controller_machine(g, 2), horizons);
    for (int t = 1; t <= 10; ++t)
      if (prof[t - 1].second != 1 - Rat(1, BigInt(1) << t)) return false;
    if (solve_delayed_control(g, 2).controller_wins) return false;
    return solve_delay_game(dc_to_delay_game(g, 2), false).winner ==
           PlayerRole::PlayerO;
  });

  criterion(7, "random corpus equivalence with verified strategies", [] {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 200) {
      DelayedControlGame g = random_dc_game(rng);
      std::vector<bool> wins;
      for (int delta : {0, 2, 4}) {
        DcSolveResult dc;
        DelayGame dg = dc_to_delay_game(g, delta);
        try {
          dc = solve_delayed_control(g, delta);
        } catch (const budget_error&) {
          continue;
        }
        DelaySolveResult img = solve_delay_game(dg);
        if (dc.controller_wins != (img.winner == PlayerRole::PlayerI))
          return false;
        wins.push_back(dc.controller_wins);
        if (!dc.machine || !img.machine) return false;
        if (dc.controller_wins) {
          if (!verify_strategy(g, delta, *dc.machine, PlayerRole::Controller).ok)
            return false;
        } else if (!verify_strategy(dg, *dc.machine, PlayerRole::PlayerO).ok) {
          return false;
        }
        if (!verify_strategy(dg, *img.machine, img.winner).ok) return false;
        if (delta == 0) {
          ReducedGame red = reduce_lookahead(dg);
          auto oracle = oracle_regions(red.game);
          if (!oracle.empty()) {
            Solution sol = solve(red.game);
            for (int v = 0; v < red.game.num_vertices(); ++v)
              if (static_cast<bool>(oracle[v]) != (sol.winner[v] == 0))
                return false;
          }
        }
      }
      if (wins.size() == 3 && (wins[0] < wins[1] || wins[1] < wins[2]))
        return false;
      ++done;
    }
    return true;
  });

  criterion(8, "environment wins lift to Player O", [] {
    std::mt19937 rng(32);
    int lifted = 0;
    while (lifted < 25) {
      DelayedControlGame g = random_dc_game(rng);
      EnvSolveResult env = solve_environment(g);
      if (!env.environment_wins) continue;
      if (!env.machine) return false;
      for (int k : {0, 1, 2}) {
        TransformReceipt receipt;
        DelayGame dg = dc_to_delay_game(g, 2 * k, &receipt);
        StrategyMachine o = lift_env_to_O(*env.machine, k, receipt);
        if (!verify_strategy(dg, o, PlayerRole::PlayerO).ok) return false;
      }
      ++lifted;
    }
    return true;
  });

  criterion(9, "complement lasso partition and round-trips", [] {
    std::mt19937 rng(11);
    for (int round = 0; round < 100; ++round) {
      OmegaAutomaton a = random_automaton(rng, {"0", "1"}, 5);
      OmegaAutomaton c = complement_of(a);
      for (int lu = 0; lu <= 5; ++lu)
        for (int wu = 0; wu < 1 << lu; ++wu)
          for (int lv = 1; lv <= 5; ++lv)
            for (int wv = 0; wv < 1 << lv; ++wv) {
              std::vector<int> u(lu), v(lv);
              for (int i = 0; i < lu; ++i) u[i] = (wu >> i) & 1;
              for (int i = 0; i < lv; ++i) v[i] = (wv >> i) & 1;
              if (run_automaton_idx(a, u, v) == run_automaton_idx(c, u, v))
                return false;
            }
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "delcon_acceptance";
    fs::create_directories(dir);
    std::mt19937 rng2(34);
    for (int round = 0; round < 50; ++round) {
      DelayGame dg = random_delay_game(rng2);
      GameText t = print_game(dg, "g");
      std::ofstream(dir / "g.game") << t.game;
      std::ofstream(dir / t.automaton_file) << t.automaton;
      BuiltinGame back = parse_game_file((dir / "g.game").string());
      if (!std::holds_alternative<DelayGame>(back)) return false;
      if (difference_witness(dg.condition, std::get<DelayGame>(back).condition))
        return false;
    }
    return true;
  });

  criterion(10, "degenerate safety game reaches AllDelays", [] {
    Arena a;
    a.add_state("c", Owner::Controller);
    a.add_state("e", Owner::Environment);
    a.cletters = {"a"};
    a.eletters = {"x", "y"};
    a.next = {{1}, {0, 0}};
    DelayedControlGame g = make_state_condition_game(a, {AcceptanceKind::Safety, {}, {}});
    if (size_of(g) > 7) return false;
    DeltaSweep s = sweep_delta(g, 256);
    return s.verdict == DeltaSweep::Verdict::AllDelays && s.bound &&
           s.bound->delta == BigInt(2) << size_of(g);
  });

  criterion(11, "simulation reproducibility and coverage", [] {
    DelayedControlGame g = builtin_dc("fig4_predict");
    StrategyMachine c = uniform_controller_machine(g, 2);
    StrategyMachine e = uniform_environment_machine(g);
    HorizonPolicy hp{4, false};
    ValueReport a = simulate(g, 2, c, e, hp, 10000, 7);
    ValueReport b = simulate(g, 2, c, e, hp, 10000, 7);
    if (!a.estimate || !b.estimate || *a.estimate != *b.estimate) return false;
    if (a.lo != b.lo || a.hi != b.hi) return false;
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ValueReport r = simulate(g, 2, c, e, hp, 10000, seed);
      if (r.lo <= Rat(1, 2) && Rat(1, 2) <= r.hi) ++covered;
    }
    return covered >= 99;
  });

  return failures == 0 ? 0 : 1;
}
