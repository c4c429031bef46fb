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

#include "delcon/game.hpp"

#include <algorithm>

namespace delcon {

DelayedControlGame make_state_condition_game(Arena arena, StateCondition cond) {
  DelayedControlGame g;
  OmegaAutomaton aut;
  aut.letters = arena.state_names;
  aut.kind = cond.kind;
  if (cond.kind == AcceptanceKind::Parity) {
    // Identity tracker: the automaton state mirrors the arena state.
    aut.state_names = arena.state_names;
    aut.next.assign(aut.num_states(), {});
    aut.marked.assign(aut.num_states(), 0);
    aut.color.assign(aut.num_states(), 0);
    for (int q = 0; q < aut.num_states(); ++q) {
      aut.next[q].resize(aut.num_letters());
      for (int a = 0; a < aut.num_letters(); ++a) aut.next[q][a] = a;
    }
    for (const auto& [name, c] : cond.colors) {
      int q = aut.state_index(name);
      if (q < 0) throw validation_error("colored state not in arena: " + name);
      aut.color[q] = c;
    }
    aut.initial = arena.initial;
  } else {
    std::vector<char> bad(arena.num_states(), 0);
    for (const auto& name : cond.marked_states) {
      int s = arena.state_index(name);
      if (s < 0) throw validation_error("marked state not in arena: " + name);
      bad[s] = 1;
    }
    aut.add_state("q_clear");
    aut.add_state("q_marked");
    aut.marked = {0, 1};
    for (int a = 0; a < aut.num_letters(); ++a) {
      aut.next[0][a] = bad[a] ? 1 : 0;
      aut.next[1][a] = 1;
    }
    aut.initial = bad[arena.initial] ? 1 : 0;
  }
  g.arena = std::move(arena);
  g.condition = std::move(aut);
  g.shorthand = std::move(cond);
  return g;
}

std::string primed_fresh(std::string name, const std::vector<std::string>& taken) {
  while (index_of(taken, name) >= 0) name += "'";
  return name;
}

DelayGame make_delay_game(int lookahead, std::vector<std::string> iletters,
                          std::vector<std::string> oletters,
                          OmegaAutomaton condition) {
  DelayGame g;
  g.lookahead = lookahead;
  g.iletters = iletters;
  std::vector<std::pair<std::string, std::string>> pair_renaming;
  for (const auto& o : oletters) {
    std::string fresh = primed_fresh(o, iletters);
    g.oletters.push_back(fresh);
    if (fresh != o) {
      g.renamed.emplace_back(o, fresh);
      for (const auto& i : iletters)
        pair_renaming.emplace_back(pair_letter(i, o), pair_letter(i, fresh));
    }
  }
  g.condition = rename_letters(condition, pair_renaming);
  auto want = pair_alphabet(g.iletters, g.oletters);
  if (g.condition.letters != want) {
    // Same letter set in a different order is still fine; anything else
    // is a modelling error.
    auto sorted = g.condition.letters;
    auto wsorted = want;
    std::sort(sorted.begin(), sorted.end());
    std::sort(wsorted.begin(), wsorted.end());
    if (sorted != wsorted)
      throw validation_error("condition alphabet is not the pair alphabet");
    // Reorder columns into canonical pair order.
    OmegaAutomaton reordered = g.condition;
    reordered.letters = want;
    for (int q = 0; q < reordered.num_states(); ++q)
      for (std::size_t a = 0; a < want.size(); ++a)
        reordered.next[q][a] =
            g.condition.next[q][g.condition.letter_index(want[a])];
    g.condition = std::move(reordered);
  }
  return g;
}

std::vector<std::string> validate(const DelayedControlGame& g) {
  std::vector<std::string> errs = validate(g.arena);
  auto ce = validate(g.condition);
  errs.insert(errs.end(), ce.begin(), ce.end());
  if (g.condition.letters != g.arena.state_names)
    errs.push_back("condition alphabet must be the arena state set");
  return errs;
}

std::vector<std::string> validate(const DelayGame& g) {
  std::vector<std::string> errs = validate(g.condition);
  if (g.lookahead < 0) errs.push_back("lookahead must be nonnegative");
  if (g.iletters.empty()) errs.push_back("input alphabet is empty");
  if (g.oletters.empty()) errs.push_back("output alphabet is empty");
  for (const auto& o : g.oletters)
    if (index_of(g.iletters, o) >= 0)
      errs.push_back("alphabets overlap on " + o);
  if (g.condition.letters != pair_alphabet(g.iletters, g.oletters))
    errs.push_back("condition alphabet must be the pair alphabet");
  return errs;
}

int size_of(const DelayedControlGame& g) {
  return g.arena.num_states() + static_cast<int>(g.arena.cletters.size()) +
         static_cast<int>(g.arena.eletters.size()) + g.condition.num_states();
}

}  // namespace delcon
