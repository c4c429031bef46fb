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

#include "delcon/arena.hpp"
#include "delcon/automaton.hpp"

namespace delcon {

/// State-based condition shorthand: unsafe/target/coloring directly on
/// arena states. Kept alongside the normalized automaton for printing.
struct StateCondition {
  AcceptanceKind kind = AcceptanceKind::Safety;
  std::vector<std::string> marked_states;            // safety/reachability
  std::vector<std::pair<std::string, int>> colors;   // parity
  bool operator==(const StateCondition&) const = default;
};

/// Arena plus a winning condition automaton over the arena state names.
struct DelayedControlGame {
  Arena arena;
  OmegaAutomaton condition;  // alphabet == arena.state_names
  std::optional<StateCondition> shorthand;
  bool operator==(const DelayedControlGame&) const = default;
};

/// Normalizes a state-based condition to an automaton: safety/reachability
/// via a 2-state automaton, parity via an identity-tracking automaton.
DelayedControlGame make_state_condition_game(Arena arena, StateCondition cond);

/// Lookahead game: Player I grants a lookahead of k letters to Player O;
/// the condition automaton reads pair letters "(i,o)".
struct DelayGame {
  int lookahead = 0;
  std::vector<std::string> iletters;
  std::vector<std::string> oletters;
  OmegaAutomaton condition;  // over pair_alphabet(iletters, oletters)
  // Output letters renamed at construction to keep the alphabets
  // disjoint (old, new); empty when nothing collided.
  std::vector<std::pair<std::string, std::string>> renamed;
  bool operator==(const DelayGame&) const = default;
};

/// Builds a delay game, priming output letters that collide with input
/// letters and renaming the condition alphabet accordingly.
DelayGame make_delay_game(int lookahead, std::vector<std::string> iletters,
                          std::vector<std::string> oletters, OmegaAutomaton condition);

/// Appends a prime until `name` avoids everything in `taken`.
std::string primed_fresh(std::string name, const std::vector<std::string>& taken);

std::vector<std::string> validate(const DelayedControlGame& g);
std::vector<std::string> validate(const DelayGame& g);

/// |S| + |Sigma_c| + |Sigma_e| + condition state count.
int size_of(const DelayedControlGame& g);

}  // namespace delcon
