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

#include "delcon/game.hpp"
#include "delcon/machine.hpp"

namespace delcon {

/// Bookkeeping for a game transformation: which letters were primed and
/// how large the produced condition is.
struct TransformReceipt {
  enum class Direction { DcToDg, DgToDc };
  Direction direction = Direction::DcToDg;
  // (original, renamed) pairs; a bijection on the renamed letters.
  std::vector<std::pair<std::string, std::string>> renaming;
  int input_condition_states = 0;
  int output_condition_states = 0;
  int output_arena_states = 0;  // DgToDc only
};

/// The language of letter-pair sequences whose induced play is winning
/// for controller. States are (controller arena state, condition state)
/// for safety/reachability, with an extra skipped-color component for
/// parity conditions.
OmegaAutomaton dc_to_condition(const DelayedControlGame& g);

/// Delay game with k = delta/2 whose condition is the complement of
/// dc_to_condition(g); Player I wins it iff controller wins g under
/// delay delta. Throws usage_error on odd delta.
DelayGame dc_to_delay_game(const DelayedControlGame& g, int delta,
                           TransformReceipt* receipt = nullptr);

/// Game under delayed control simulating the delay game: controller
/// plays Player I's letters, environment Player O's; controller wins the
/// result under delay 2k iff Player I wins dg.
struct DgToDcResult {
  DelayedControlGame game;
  int delta = 0;  // 2 * dg.lookahead
  TransformReceipt receipt;
};
DgToDcResult dg_to_dc(const DelayGame& dg);

/// Repackages a controller machine under delay delta as a Player I
/// machine at lookahead delta/2 (the streams coincide; only the letter
/// names change, per the receipt's renaming).
StrategyMachine lift_controller_to_I(const StrategyMachine& s, int delta,
                                     const TransformReceipt& receipt);

/// Inverse packaging of lift_controller_to_I.
StrategyMachine lift_I_to_controller(const StrategyMachine& s, int lookahead,
                                     const TransformReceipt& receipt);

/// Wraps an environment machine (Responder, lead-in 0) into a Player O
/// machine at lookahead k that buffers the most recent k input letters
/// and drives the original machine with the delayed stream.
StrategyMachine lift_env_to_O(const StrategyMachine& s, int k,
                              const TransformReceipt& receipt);

}  // namespace delcon
