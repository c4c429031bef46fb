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

#include "delcon/machine.hpp"

#include <set>

#include "delcon/game.hpp"

namespace delcon {

int StrategyMachine::next_mem(int m, int in, int out) const {
  auto it = update.find({m, in, out});
  return it == update.end() ? m : it->second;
}

const LetterDist& StrategyMachine::out_dist(int m, int in) const {
  auto it = output.find({m, in});
  if (it == output.end())
    throw usage_error("machine has no output at memory " + memory_names[m] +
                      " on input " +
                      (in == kEps ? std::string("<eps>") : in_letters[in]));
  return it->second;
}

bool StrategyMachine::is_pure() const {
  if (side == Side::Emitter &&
      (init_blocks.size() != 1 || init_blocks[0].second != 1))
    return false;
  for (const auto& [key, dist] : output)
    if (dist.size() != 1 || dist[0].second != 1) return false;
  return true;
}

int StrategyMachine::block_length() const {
  return init_blocks.empty() ? 0
                             : static_cast<int>(init_blocks[0].first.size());
}

std::vector<std::string> validate(const StrategyMachine& m) {
  std::vector<std::string> errs;
  if (m.in_letters.empty()) errs.push_back("machine has no input letters");
  if (m.out_letters.empty()) errs.push_back("machine has no output letters");
  if (m.memory_names.empty()) errs.push_back("machine has no memory states");
  if (m.memory_init < 0 || m.memory_init >= m.num_memories())
    errs.push_back("initial memory out of range");
  if (m.side == StrategyMachine::Side::Emitter) {
    if (m.init_blocks.empty()) errs.push_back("emitter needs an initial block");
    if (m.lead_in != 0) errs.push_back("emitter cannot have a lead-in");
    Rat total = 0;
    std::size_t len = m.init_blocks.empty() ? 0 : m.init_blocks[0].first.size();
    for (const auto& [block, p] : m.init_blocks) {
      total += p;
      if (p <= 0) errs.push_back("nonpositive block probability");
      if (block.size() != len) errs.push_back("initial blocks differ in length");
      for (int l : block)
        if (l < 0 || l >= static_cast<int>(m.out_letters.size()))
          errs.push_back("block letter out of range");
    }
    if (!m.init_blocks.empty() && total != 1)
      errs.push_back("block probabilities must sum to 1");
  } else {
    if (!m.init_blocks.empty()) errs.push_back("responder cannot emit a block");
    if (m.lead_in < 0) errs.push_back("negative lead-in");
  }
  for (const auto& [key, dist] : m.output) {
    auto [mem, in] = key;
    if (mem < 0 || mem >= m.num_memories())
      errs.push_back("output row references unknown memory");
    if (in != StrategyMachine::kEps &&
        (in < 0 || in >= static_cast<int>(m.in_letters.size())))
      errs.push_back("output row references unknown input letter");
    Rat total = 0;
    std::set<int> seen;
    for (const auto& [l, p] : dist) {
      total += p;
      if (p <= 0) errs.push_back("nonpositive output probability");
      if (l < 0 || l >= static_cast<int>(m.out_letters.size()))
        errs.push_back("output letter out of range");
      else if (!seen.insert(l).second)
        errs.push_back("duplicate letter in output distribution");
    }
    if (total != 1) errs.push_back("output distribution must sum to 1");
  }
  for (const auto& [key, to] : m.update) {
    if (key[0] < 0 || key[0] >= m.num_memories() || to < 0 ||
        to >= m.num_memories())
      errs.push_back("update references unknown memory");
    if (key[1] != StrategyMachine::kEps &&
        (key[1] < 0 || key[1] >= static_cast<int>(m.in_letters.size())))
      errs.push_back("update references unknown input letter");
    if (key[2] != StrategyMachine::kEps &&
        (key[2] < 0 || key[2] >= static_cast<int>(m.out_letters.size())))
      errs.push_back("update references unknown output letter");
  }
  return errs;
}

int step_block(const StrategyMachine& m, int mem, int emitted) {
  return m.next_mem(mem, StrategyMachine::kEps, emitted);
}

StrategyMachine pure_emitter(
    std::vector<std::string> in_letters, std::vector<std::string> out_letters,
    std::vector<std::string> block,
    const std::vector<std::pair<std::string, std::string>>& responses) {
  StrategyMachine m;
  m.side = StrategyMachine::Side::Emitter;
  m.in_letters = std::move(in_letters);
  m.out_letters = std::move(out_letters);
  std::vector<int> b;
  for (const auto& l : block) {
    int i = m.out_index(l);
    if (i < 0) throw usage_error("block letter not in output alphabet: " + l);
    b.push_back(i);
  }
  m.init_blocks.emplace_back(std::move(b), Rat(1));
  for (const auto& [in, out] : responses) {
    int i = m.in_index(in);
    int o = m.out_index(out);
    if (i < 0 || o < 0) throw usage_error("unknown letter in response table");
    m.output[{0, i}] = {{o, Rat(1)}};
  }
  return m;
}

namespace {

StrategyMachine uniform_over(std::vector<std::string> in_letters,
                             std::vector<std::string> out_letters) {
  StrategyMachine m;
  m.in_letters = std::move(in_letters);
  m.out_letters = std::move(out_letters);
  int n = static_cast<int>(m.out_letters.size());
  LetterDist d;
  for (int l = 0; l < n; ++l) d.emplace_back(l, Rat(1, n));
  for (int i = 0; i < static_cast<int>(m.in_letters.size()); ++i)
    m.output[{0, i}] = d;
  return m;
}

}  // namespace

StrategyMachine uniform_controller_machine(const DelayedControlGame& g,
                                           int delta) {
  if (delta % 2 != 0) throw usage_error("delay must be even");
  StrategyMachine m = uniform_over(g.arena.eletters, g.arena.cletters);
  m.side = StrategyMachine::Side::Emitter;
  int n = static_cast<int>(m.out_letters.size());
  int len = delta / 2 + 1;
  // All length-(delta/2 + 1) blocks, uniformly.
  std::vector<int> block(len, 0);
  Rat p = 1;
  for (int i = 0; i < len; ++i) p /= n;
  while (true) {
    m.init_blocks.emplace_back(block, p);
    int i = len - 1;
    while (i >= 0 && block[i] == n - 1) block[i--] = 0;
    if (i < 0) break;
    ++block[i];
  }
  return m;
}

StrategyMachine uniform_environment_machine(const DelayedControlGame& g) {
  StrategyMachine m = uniform_over(g.arena.cletters, g.arena.eletters);
  m.side = StrategyMachine::Side::Responder;
  return m;
}

}  // namespace delcon
