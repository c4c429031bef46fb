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

#include "delcon/automaton.hpp"

namespace delcon {

/// Two-player turn-based graph game without delay. Player 0 wants the
/// objective to hold along the play; Player 1 opposes. The move relation
/// must be total.
struct GraphGame {
  struct Edge {
    int to = 0;
    int label = -1;  // index into `labels`, or -1
  };

  std::vector<std::string> vertex_names;
  std::vector<int> owner;  // 0 or 1 per vertex
  int initial = 0;
  std::vector<std::vector<Edge>> succ;
  AcceptanceKind kind = AcceptanceKind::Safety;
  std::vector<char> marked;  // safety: bad for P0; reachability: target
  std::vector<int> color;    // parity: P0 wants max recurring color even
  std::vector<std::string> labels;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int add_vertex(std::string name, int who);
};

std::vector<std::string> validate(const GraphGame& g);

/// Winning regions and positional strategies, one chosen edge index per
/// vertex owned by that vertex's winner.
struct Solution {
  std::vector<int> winner;    // 0 or 1 per vertex
  std::vector<int> strategy;  // edge index, -1 where the owner loses
};

/// Vertices from which `player` can force a visit to `targets`, plus a
/// move witness on its own attractor vertices outside the target set.
struct AttractorResult {
  std::vector<char> in;
  std::vector<int> strategy;
};
AttractorResult attractor(const GraphGame& g, int player,
                          const std::vector<char>& targets);

/// Solves the game: safety and reachability by attractor computation,
/// parity by Zielonka's recursion.
Solution solve(const GraphGame& g);

/// Lasso violating the want-accept objective inside the subgraph of
/// vertices where `allowed` holds, starting from `from`, treating every
/// vertex as having a single forced successor list (no ownership). Used
/// for witness extraction; nullopt when no violating lasso exists.
struct VertexLasso {
  std::vector<int> stem;   // from .. lasso entry (inclusive)
  std::vector<int> cycle;  // entry .. back to entry (entry excluded at end)
};
std::optional<VertexLasso> find_violation(const GraphGame& g, int from,
                                          const std::vector<char>& allowed);

/// Synchronous product of an arena and a condition automaton over the
/// arena's state names: P0 = controller. Vertex i*|Q|+q style packing is
/// internal; names are "s|q".
GraphGame product_game(const struct Arena& arena, const OmegaAutomaton& cond);

}  // namespace delcon
