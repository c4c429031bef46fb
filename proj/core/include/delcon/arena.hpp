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
#include <vector>

#include "delcon/automaton.hpp"
#include "delcon/base.hpp"

namespace delcon {

enum class Owner { Controller, Environment };

/// Finite alternating two-player transition structure. Controller-owned
/// states move on controller letters into environment-owned states and
/// vice versa; the transition function is total per owner alphabet.
struct Arena {
  std::vector<std::string> state_names;
  std::vector<Owner> owner;
  int initial = 0;
  std::vector<std::string> cletters;
  std::vector<std::string> eletters;
  // next[state][letter] where the letter indexes the owning player's
  // alphabet (cletters for controller states, eletters otherwise).
  std::vector<std::vector<int>> next;

  int num_states() const { return static_cast<int>(state_names.size()); }
  int state_index(const std::string& n) const { return index_of(state_names, n); }
  int add_state(const std::string& name, Owner o);
  const std::vector<std::string>& alphabet_of(int state) const {
    return owner[state] == Owner::Controller ? cletters : eletters;
  }
  bool operator==(const Arena&) const = default;
};

std::vector<std::string> validate(const Arena& a);

/// Alternating sequence state, letter, state, ...; length = letter count.
struct PlayPrefix {
  std::vector<int> states;   // |letters| + 1 entries
  std::vector<int> letters;  // index into the mover's alphabet
};

/// The unique play prefix induced by a letter word starting at the
/// initial state. Throws usage_error on an illegal letter.
PlayPrefix play_of(const Arena& a, const std::vector<std::string>& word);

}  // namespace delcon
