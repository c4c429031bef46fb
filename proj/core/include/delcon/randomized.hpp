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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcon/game.hpp"
#include "delcon/machine.hpp"
#include "delcon/report.hpp"

namespace delcon {

/// Horizon T counts controller-response rounds; the truncated play has
/// 2T+1 letters. Truncation is one-sided: an unreached target counts as
/// a loss, an unviolated safety condition as a win. With `absorbing`
/// every length-T play must be decided, making values exact.
struct HorizonPolicy {
  int horizon = 1;
  bool absorbing = false;
};

/// True when every play of g under delta is decided within T rounds
/// (the product has reached a state whose outcome no continuation can
/// change).
bool is_absorbing_within(const DelayedControlGame& g, int delta, int horizon);

/// Exact min over environment strategies of the controller's winning
/// probability when playing the fixed mixed machine under delay delta.
ValueReport evaluate_guaranteed(const DelayedControlGame& g, int delta,
                                const StrategyMachine& controller,
                                const HorizonPolicy& hp);

/// Exact max over delay-constrained controller strategies against the
/// fixed environment machine. Upper-bounds the game value.
ValueReport best_response_controller(const DelayedControlGame& g, int delta,
                                     const StrategyMachine& environment,
                                     const HorizonPolicy& hp);

/// Exact value via the finite normal form: pure strategies are maps
/// from information sets to letters; both players have perfect recall,
/// so mixtures over them realize every behavior strategy.
struct NormalFormOptions {
  std::size_t strategy_cap = std::size_t{1} << 14;  // per side
};
ValueReport normal_form_value(const DelayedControlGame& g, int delta,
                              const HorizonPolicy& hp,
                              const NormalFormOptions& opts = {});

/// Monte Carlo estimate with a 99% normal-approximation interval;
/// per-trial randomness derived from (seed, trial index).
ValueReport simulate(const DelayedControlGame& g, int delta,
                     const StrategyMachine& controller,
                     const StrategyMachine& environment,
                     const HorizonPolicy& hp, std::uint64_t trials,
                     std::uint64_t seed);

/// Guaranteed-value lower bounds at increasing horizons; reachability
/// only (monotone in T).
std::vector<std::pair<int, Rat>> value_profile(const DelayedControlGame& g,
                                               int delta,
                                               const StrategyMachine& controller,
                                               const std::vector<int>& horizons);

/// Full classification: sure winner, exact mixed value on absorbing
/// games, or a sandwich of bounds with the evidence machines.
struct RandomizedClassification {
  enum class Kind { ControllerSure, EnvSure, Value, Bounds, UndeterminedPure };
  Kind kind = Kind::UndeterminedPure;
  std::optional<Rat> value;      // Value: controller's theta
  std::optional<Rat> env_value;  // Value: 1 - theta
  std::optional<Rat> lo, hi;     // Bounds
  std::optional<StrategyMachine> controller_evidence;
  std::optional<StrategyMachine> environment_evidence;
};
RandomizedClassification classify_randomized(const DelayedControlGame& g,
                                             int delta, const HorizonPolicy& hp,
                                             const NormalFormOptions& opts = {});

std::string to_string(RandomizedClassification::Kind k);

}  // namespace delcon
