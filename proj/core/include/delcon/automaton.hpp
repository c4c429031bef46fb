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

#include <span>
#include <string>
#include <vector>

#include "delcon/base.hpp"

namespace delcon {

enum class AcceptanceKind { Safety, Reachability, Parity };

std::string to_string(AcceptanceKind k);

/// Deterministic omega-automaton with a total transition function.
///
/// The acceptance is one of:
///   Safety        accept iff no marked (unsafe) state is ever visited,
///   Reachability  accept iff some marked (target) state is visited,
///   Parity        accept iff the maximal color seen infinitely often is even.
/// The run on w starts at `initial` and includes the initial state itself
/// in the acceptance check.
struct OmegaAutomaton {
  std::vector<std::string> state_names;
  std::vector<std::string> letters;
  int initial = 0;
  std::vector<std::vector<int>> next;  // [state][letter] -> state
  AcceptanceKind kind = AcceptanceKind::Safety;
  std::vector<char> marked;  // Safety: unsafe; Reachability: target
  std::vector<int> color;    // Parity

  int num_states() const { return static_cast<int>(state_names.size()); }
  int num_letters() const { return static_cast<int>(letters.size()); }
  int state_index(const std::string& n) const { return index_of(state_names, n); }
  int letter_index(const std::string& l) const { return index_of(letters, l); }

  int add_state(const std::string& name);
  bool operator==(const OmegaAutomaton&) const = default;
};

/// Letter name for the pair (a, b) in a product alphabet: "(a,b)".
std::string pair_letter(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_pair_letter(const std::string& l);
std::vector<std::string> pair_alphabet(const std::vector<std::string>& in,
                                       const std::vector<std::string>& out);

std::vector<std::string> validate(const OmegaAutomaton& aut);

/// Same language, but with the marked set absorbing (safety/reachability
/// only; parity automata are returned unchanged).
OmegaAutomaton saturated(const OmegaAutomaton& aut);

/// Complement: safety(U) <-> reachability(F), parity colors +1.
OmegaAutomaton complement_of(const OmegaAutomaton& aut);

/// Compresses parity colors to a contiguous range starting at 0 or 1,
/// preserving order and parity. No-op for safety/reachability.
OmegaAutomaton normalize_colors(const OmegaAutomaton& aut);

/// Renames letters according to a (old, new) table; letters not listed
/// keep their names.
OmegaAutomaton rename_letters(const OmegaAutomaton& aut,
                              const std::vector<std::pair<std::string, std::string>>& table);

/// Membership of the ultimately periodic word u v^omega (letter names).
bool run_automaton(const OmegaAutomaton& aut, const std::vector<std::string>& u,
                   const std::vector<std::string>& v);
bool run_automaton_idx(const OmegaAutomaton& aut, std::span<const int> u,
                       std::span<const int> v);

/// An ultimately periodic witness word u v^omega.
struct Lasso {
  std::vector<std::string> stem;   // u
  std::vector<std::string> cycle;  // v, nonempty
  bool operator==(const Lasso&) const = default;
};

/// Returns nothing iff L(a) = L(b); otherwise a lasso accepted by exactly
/// one of the two. Throws usage_error on alphabet mismatch.
std::optional<Lasso> difference_witness(const OmegaAutomaton& a, const OmegaAutomaton& b);

}  // namespace delcon
