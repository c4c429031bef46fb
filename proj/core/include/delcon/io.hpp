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

#include <string>
#include <variant>

#include "delcon/builtins.hpp"
#include "delcon/game.hpp"
#include "delcon/machine.hpp"

namespace delcon {

/// Line-oriented game text. Condition automata referenced by file are
/// resolved relative to `dir`. Throws validation_error with a line
/// number on syntax errors.
BuiltinGame parse_game(const std::string& text, const std::string& dir = ".");
BuiltinGame parse_game_file(const std::string& path);

/// Canonical form: parse(print(g)) == g. Delay-game conditions are
/// written inline into a companion automaton text (second member).
struct GameText {
  std::string game;
  std::string automaton;  // empty for state-based shorthands
  std::string automaton_file;
};
GameText print_game(const BuiltinGame& g, const std::string& base_name);

OmegaAutomaton parse_automaton(const std::string& text);
std::string print_automaton(const OmegaAutomaton& a);

StrategyMachine parse_machine(const std::string& text);
std::string print_machine(const StrategyMachine& m);

}  // namespace delcon
