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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "delcon/base.hpp"

namespace delcon {

struct DelayedControlGame;

/// Probability distribution over letter indices; weights are exact
/// rationals summing to 1.
using LetterDist = std::vector<std::pair<int, Rat>>;

/// Finite-state transducer realization of a strategy.
///
/// An Emitter (controller / Player I) first emits its initial block of
/// own letters without reading anything, then emits one letter per input
/// letter consumed. A Responder (environment / Player O) consumes
/// `lead_in` input letters silently, then answers each further input
/// with one output letter.
///
/// Memory transitions use `kEps` (-1) in the input slot for block
/// emissions and in the output slot for silent lead-in steps. Missing
/// update entries leave the memory unchanged.
struct StrategyMachine {
  enum class Side { Emitter, Responder };
  static constexpr int kEps = -1;

  Side side = Side::Emitter;
  std::vector<std::string> in_letters;
  std::vector<std::string> out_letters;
  // Emitter: distribution over initial blocks (pure = one entry, prob 1).
  std::vector<std::pair<std::vector<int>, Rat>> init_blocks;
  int lead_in = 0;  // Responder only
  std::vector<std::string> memory_names{"m0"};
  int memory_init = 0;
  // (memory, input letter) -> output distribution
  std::map<std::pair<int, int>, LetterDist> output;
  // (memory, input-or-eps, output-or-eps) -> memory
  std::map<std::array<int, 3>, int> update;

  int num_memories() const { return static_cast<int>(memory_names.size()); }
  int next_mem(int m, int in, int out) const;
  const LetterDist& out_dist(int m, int in) const;  // throws if missing
  bool is_pure() const;
  int block_length() const;  // common length of all initial blocks

  int in_index(const std::string& l) const { return index_of(in_letters, l); }
  int out_index(const std::string& l) const { return index_of(out_letters, l); }
  bool operator==(const StrategyMachine&) const = default;
};

std::vector<std::string> validate(const StrategyMachine& m);

/// Runs the machine's memory through one emitted block letter.
int step_block(const StrategyMachine& m, int mem, int emitted);

/// Memoryless pure Emitter machine: fixed block, fixed letter per input.
StrategyMachine pure_emitter(std::vector<std::string> in_letters,
                             std::vector<std::string> out_letters,
                             std::vector<std::string> block,
                             const std::vector<std::pair<std::string, std::string>>& responses);

/// Uniform coin-tossing controller machine for delay `delta`: the block
/// and every response are drawn uniformly from the controller alphabet.
StrategyMachine uniform_controller_machine(const DelayedControlGame& g, int delta);

/// Uniform environment machine (Responder, lead-in 0).
StrategyMachine uniform_environment_machine(const DelayedControlGame& g);

}  // namespace delcon
