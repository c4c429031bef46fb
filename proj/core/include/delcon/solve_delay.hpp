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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delcon/base.hpp"
#include "delcon/game.hpp"
#include "delcon/graph_game.hpp"
#include "delcon/machine.hpp"
#include "delcon/verify.hpp"

namespace delcon {

/// Vertex budget for lookahead reduction; overridable through the
/// DELCON_BUDGET environment variable.
std::size_t reduction_budget();

/// Delay-free graph game equivalent to the delay game: Player I fills a
/// buffer of up to k+1 letters, Player O answers the oldest one. P0 is
/// Player O. Throws budget_error when the estimated vertex count
/// exceeds the budget.
struct ReducedGame {
  GraphGame game;
  // Decoding tables, parallel to game vertices.
  std::vector<int> cond_state;
  std::vector<std::vector<int>> buffer;  // Player I letter indices
};
ReducedGame reduce_lookahead(const DelayGame& dg);

/// Who wins the delay game from the start, with a winning machine for
/// the winner when requested.
struct DelaySolveResult {
  PlayerRole winner = PlayerRole::PlayerI;
  std::optional<StrategyMachine> machine;
  std::size_t reduced_vertices = 0;
};
DelaySolveResult solve_delay_game(const DelayGame& dg, bool want_machine = true);

/// Solves g under the given even delay via the delay-game reduction.
/// On a win, `machine` is a controller machine; otherwise it is Player
/// O's winning machine on the image delay game, a certificate that no
/// controller strategy exists (the delay game is determined).
struct DcSolveResult {
  bool controller_wins = false;
  std::optional<StrategyMachine> machine;
  std::size_t reduced_vertices = 0;
};
DcSolveResult solve_delayed_control(const DelayedControlGame& g, int delta,
                                    bool want_machine = true);

/// Environment side: delay-free product game; returns a winning
/// environment Responder machine when the environment wins.
struct EnvSolveResult {
  bool environment_wins = false;
  std::optional<StrategyMachine> machine;
};
EnvSolveResult solve_environment(const DelayedControlGame& g);

/// Upper bound on the decisive delay. PaperExact bounds are tight for
/// safety conditions; BigOHeuristic bounds drop the hidden constant.
struct DecisiveBound {
  enum class Quality { PaperExact, BigOHeuristic };
  BigInt delta;
  Quality quality = Quality::PaperExact;
};
DecisiveBound decisive_bound(const DelayedControlGame& g);

/// Pure-strategy classification. ControllerSure iff the controller wins
/// under delta; else EnvSure iff the environment wins delay-free; else
/// the game is undetermined under delta.
enum class PureVerdict { ControllerSure, EnvSure, UndeterminedPure };
PureVerdict classify_pure(const DelayedControlGame& g, int delta);
std::string to_string(PureVerdict v);

/// Winning-delay structure discovered by sweeping even delays up to
/// `cap` (inclusive). Winning delays are downward closed; the sweep is
/// a binary search with pointwise-verified endpoints.
struct DeltaSweep {
  enum class Verdict { AllDelays, ThresholdInCap, NoneUpToCap };
  Verdict verdict = Verdict::NoneUpToCap;
  int max_winning_delta = -1;  // largest winning even delay <= cap, -1 if none
  std::vector<std::pair<int, bool>> tested;  // (delta, controller wins)
  std::optional<DecisiveBound> bound;        // set for AllDelays
};
DeltaSweep sweep_delta(const DelayedControlGame& g, int cap);

/// Smallest lookahead in 0..cap for which Player O wins, if any.
struct LookaheadSweep {
  bool found = false;
  int min_winning_k = -1;
  std::vector<std::pair<int, bool>> tested;  // (k, Player O wins)
};
LookaheadSweep sweep_lookahead(const DelayGame& dg, int cap);

}  // namespace delcon
