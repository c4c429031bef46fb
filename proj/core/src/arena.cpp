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

#include "delcon/arena.hpp"

#include <set>

namespace delcon {

int Arena::add_state(const std::string& name, Owner o) {
  state_names.push_back(name);
  owner.push_back(o);
  next.emplace_back(
      (o == Owner::Controller ? cletters : eletters).size(), 0);
  return num_states() - 1;
}

std::vector<std::string> validate(const Arena& a) {
  std::vector<std::string> errs;
  int n = a.num_states();
  if (n == 0) errs.push_back("arena has no states");
  if (a.cletters.empty()) errs.push_back("controller alphabet is empty");
  if (a.eletters.empty()) errs.push_back("environment alphabet is empty");
  if (a.initial < 0 || a.initial >= n)
    errs.push_back("initial state out of range");
  else if (a.owner[a.initial] != Owner::Controller)
    errs.push_back("initial state must be controller-owned");
  std::set<std::string> seen;
  for (const auto& s : a.state_names)
    if (!seen.insert(s).second) errs.push_back("duplicate state name: " + s);
  if (static_cast<int>(a.owner.size()) != n ||
      static_cast<int>(a.next.size()) != n) {
    errs.push_back("owner or transition table has wrong size");
    return errs;
  }
  for (int s = 0; s < n; ++s) {
    std::size_t want =
        (a.owner[s] == Owner::Controller ? a.cletters : a.eletters).size();
    if (a.next[s].size() != want) {
      errs.push_back("state " + a.state_names[s] + " has a partial move row");
      continue;
    }
    for (int t : a.next[s]) {
      if (t < 0 || t >= n) {
        errs.push_back("move out of range at " + a.state_names[s]);
        continue;
      }
      if (a.owner[t] == a.owner[s])
        errs.push_back("moves must alternate owners: " + a.state_names[s] +
                       " -> " + a.state_names[t]);
    }
  }
  return errs;
}

PlayPrefix play_of(const Arena& a, const std::vector<std::string>& word) {
  PlayPrefix p;
  int s = a.initial;
  p.states.push_back(s);
  for (const auto& l : word) {
    int i = index_of(a.alphabet_of(s), l);
    if (i < 0)
      throw usage_error("letter " + l + " not playable at " + a.state_names[s]);
    p.letters.push_back(i);
    s = a.next[s][i];
    p.states.push_back(s);
  }
  return p;
}

}  // namespace delcon
