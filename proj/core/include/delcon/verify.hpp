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

#include "delcon/game.hpp"
#include "delcon/machine.hpp"

namespace delcon {

/// Outcome of checking a strategy machine against every opposing play.
/// For mixed machines the check quantifies over the support, so `ok`
/// means sure winning, not just almost-sure.
struct VerifyResult {
  bool ok = false;
  // Losing play witness: alternating letters of both players, as played.
  std::vector<std::string> stem;
  std::vector<std::string> cycle;
};

enum class PlayerRole { Controller, Environment, PlayerI, PlayerO };

/// Verifies a controller machine for g under delay delta, or an
/// environment machine (delta ignored for the environment, which plays
/// delay-free).
VerifyResult verify_strategy(const DelayedControlGame& g, int delta,
                             const StrategyMachine& s, PlayerRole role);

/// Verifies a Player I or Player O machine for the delay game.
VerifyResult verify_strategy(const DelayGame& dg, const StrategyMachine& s,
                             PlayerRole role);

}  // namespace delcon
