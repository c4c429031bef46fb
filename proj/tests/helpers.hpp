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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "delcon/automaton.hpp"
#include "delcon/arena.hpp"
#include "delcon/game.hpp"
#include "delcon/graph_game.hpp"

namespace delcon::testutil {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Strictly alternating arena with small, randomized shape.
inline Arena random_arena(std::mt19937& rng, int max_states = 6,
                          int max_letters = 2) {
  Arena a;
  int nc = pick(rng, 1, std::max(1, max_states / 2));
  int ne = pick(rng, 1, max_states - nc);
  for (int i = 0; i < nc; ++i) a.add_state("c" + std::to_string(i), Owner::Controller);
  for (int i = 0; i < ne; ++i) a.add_state("e" + std::to_string(i), Owner::Environment);
  a.initial = 0;
  int ncl = pick(rng, 1, max_letters);
  int nel = pick(rng, 1, max_letters);
  for (int i = 0; i < ncl; ++i) a.cletters.push_back(std::string(1, char('a' + i)));
  for (int i = 0; i < nel; ++i) a.eletters.push_back(std::string(1, char('x' + i)));
  a.next.assign(a.num_states(), {});
  for (int s = 0; s < a.num_states(); ++s) {
    bool ctrl = a.owner[s] == Owner::Controller;
    int deg = ctrl ? ncl : nel;
    for (int l = 0; l < deg; ++l)
      a.next[s].push_back(ctrl ? nc + pick(rng, 0, ne - 1) : pick(rng, 0, nc - 1));
  }
  return a;
}

/// Random total automaton over the given alphabet, <= max_states states.
inline OmegaAutomaton random_automaton(std::mt19937& rng,
                                       std::vector<std::string> alphabet,
                                       int max_states = 3,
                                       bool allow_parity = true) {
  OmegaAutomaton aut;
  aut.letters = std::move(alphabet);
  int n = pick(rng, 1, max_states);
  for (int i = 0; i < n; ++i) aut.add_state("q" + std::to_string(i));
  aut.initial = pick(rng, 0, n - 1);
  aut.next.assign(n, {});
  for (int q = 0; q < n; ++q)
    for (std::size_t l = 0; l < aut.letters.size(); ++l)
      aut.next[q].push_back(pick(rng, 0, n - 1));
  int kind = pick(rng, 0, allow_parity ? 2 : 1);
  aut.kind = kind == 0   ? AcceptanceKind::Safety
             : kind == 1 ? AcceptanceKind::Reachability
                         : AcceptanceKind::Parity;
  // add_state sized both tables already; only fill the relevant one.
  if (aut.kind == AcceptanceKind::Parity) {
    for (int q = 0; q < n; ++q) aut.color[q] = pick(rng, 0, 3);
  } else {
    for (int q = 0; q < n; ++q) aut.marked[q] = pick(rng, 0, 2) == 0;
  }
  return aut;
}

inline DelayedControlGame random_dc_game(std::mt19937& rng, int max_states = 6,
                                         int max_letters = 2,
                                         int max_cond_states = 3,
                                         bool allow_parity = true) {
  DelayedControlGame g;
  g.arena = random_arena(rng, max_states, max_letters);
  g.condition =
      random_automaton(rng, g.arena.state_names, max_cond_states, allow_parity);
  return g;
}

inline DelayGame random_delay_game(std::mt19937& rng, int max_k = 2) {
  std::vector<std::string> in, out;
  int ni = pick(rng, 1, 2), no = pick(rng, 1, 2);
  for (int i = 0; i < ni; ++i) in.push_back(std::string(1, char('i' + i)));
  for (int i = 0; i < no; ++i) out.push_back(std::string(1, char('o' + i)));
  OmegaAutomaton cond = random_automaton(rng, pair_alphabet(in, out));
  return make_delay_game(pick(rng, 0, max_k), in, out, std::move(cond));
}

/// Player 0 winning region by enumerating Player 0 positional strategies
/// and answering each one optimally for Player 1. Independent of the
/// attractor/Zielonka code paths; intended for small graphs only.
/// Returns an empty vector when the strategy space exceeds `limit`.
inline std::vector<char> oracle_regions(const GraphGame& g,
                                        std::size_t limit = 1 << 14) {
  int n = g.num_vertices();
  std::vector<int> p0;
  std::size_t total = 1;
  for (int v = 0; v < n; ++v)
    if (g.owner[v] == 0) {
      p0.push_back(v);
      total *= g.succ[v].size();
      if (total > limit) return {};
    }

  // Does Player 1 have a violating play from v when Player 0 follows
  // choice[]? Player 1 may use full memory, but optimal play reduces to
  // reachability questions on the residual graph.
  auto p1_wins_from = [&](const std::vector<int>& choice) {
    auto succs = [&](int v) {
      std::vector<int> out;
      if (g.owner[v] == 0) {
        out.push_back(g.succ[v][choice[v]].to);
      } else {
        for (const auto& e : g.succ[v]) out.push_back(e.to);
      }
      return out;
    };
    auto reach_from = [&](int v) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : succs(u))
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      return seen;
    };

    std::vector<char> bad(n, 0);
    if (g.kind == AcceptanceKind::Safety) {
      // Violation: visit any marked vertex.
      for (int v = 0; v < n; ++v) {
        if (g.marked[v]) {
          bad[v] = 1;
          continue;
        }
        auto seen = reach_from(v);
        for (int w = 0; w < n; ++w)
          if (seen[w] && g.marked[w]) bad[v] = 1;
      }
    } else if (g.kind == AcceptanceKind::Reachability) {
      // Violation: an infinite play avoiding every target. Largest
      // target-free subgraph in which every vertex keeps a successor.
      std::vector<char> live(n);
      for (int v = 0; v < n; ++v) live[v] = !g.marked[v];
      bool changed = true;
      while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
          if (!live[v]) continue;
          bool has = false;
          for (int w : succs(v)) has = has || live[w];
          if (!has) {
            live[v] = 0;
            changed = true;
          }
        }
      }
      bad = live;
    } else {
      // Violation: reach a cycle whose maximal color is odd.
      std::vector<char> on_bad_cycle(n, 0);
      for (int w = 0; w < n; ++w) {
        if (g.color[w] % 2 == 0) continue;
        // Nonempty path w -> w using colors <= color[w].
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        for (int x : succs(w))
          if (g.color[x] <= g.color[w] && !seen[x]) {
            seen[x] = 1;
            stack.push_back(x);
          }
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int x : succs(u))
            if (g.color[x] <= g.color[w] && !seen[x]) {
              seen[x] = 1;
              stack.push_back(x);
            }
        }
        if (seen[w]) on_bad_cycle[w] = 1;
      }
      for (int v = 0; v < n; ++v) {
        auto seen = reach_from(v);
        for (int w = 0; w < n; ++w)
          if (seen[w] && on_bad_cycle[w]) bad[v] = 1;
      }
    }
    return bad;
  };

  std::vector<char> win0(n, 0);
  std::vector<int> choice(n, 0);
  std::size_t idx = 0;
  for (std::size_t it = 0; it < total; ++it) {
    std::size_t rem = it;
    for (int v : p0) {
      choice[v] = static_cast<int>(rem % g.succ[v].size());
      rem /= g.succ[v].size();
    }
    auto bad = p1_wins_from(choice);
    for (int v = 0; v < n; ++v)
      if (!bad[v]) win0[v] = 1;
    (void)idx;
  }
  return win0;
}

/// Decides the winner of the ultimately periodic pair-letter play
/// u v^omega directly on the arena plus the condition automaton, without
/// going through dc_to_condition. The condition reads the states visited
/// after each move.
inline bool lasso_winner(const DelayedControlGame& g,
                         const std::vector<std::pair<int, int>>& u,
                         const std::vector<std::pair<int, int>>& v) {
  struct Pos {
    int s, q;
    bool operator==(const Pos&) const = default;
  };
  int s = g.arena.initial;
  int q = g.condition.initial;
  auto feed_state = [&](int ns) {
    s = ns;
    q = g.condition.next[q][ns];
  };
  // Track safety/reachability decisions along the way.
  bool marked_seen = g.condition.kind != AcceptanceKind::Parity &&
                     g.condition.marked[q];
  auto note = [&] {
    if (g.condition.kind != AcceptanceKind::Parity)
      marked_seen = marked_seen || g.condition.marked[q];
  };
  note();
  for (auto p : u) {
    feed_state(g.arena.next[s][p.first]);
    note();
    feed_state(g.arena.next[s][p.second]);
    note();
  }
  if (g.condition.kind == AcceptanceKind::Parity) {
    // Iterate the cycle until (s, q) repeats, collecting recurring colors.
    std::vector<std::pair<int, int>> seen;
    std::vector<int> max_color_after;
    for (;;) {
      auto key = std::make_pair(s, q);
      auto it = std::find(seen.begin(), seen.end(), key);
      if (it != seen.end()) {
        int start = static_cast<int>(it - seen.begin());
        int best = -1;
        for (std::size_t i = start; i < max_color_after.size(); ++i)
          best = std::max(best, max_color_after[i]);
        return best % 2 == 0;
      }
      seen.push_back(key);
      int mx = -1;
      for (auto p : v) {
        feed_state(g.arena.next[s][p.first]);
        mx = std::max(mx, g.condition.color[q]);
        feed_state(g.arena.next[s][p.second]);
        mx = std::max(mx, g.condition.color[q]);
      }
      max_color_after.push_back(mx);
    }
  }
  // Safety / reachability: pump the cycle until (s, q) repeats.
  std::vector<std::pair<int, int>> seen;
  while (!marked_seen) {
    auto key = std::make_pair(s, q);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) break;
    seen.push_back(key);
    for (auto p : v) {
      feed_state(g.arena.next[s][p.first]);
      note();
      feed_state(g.arena.next[s][p.second]);
      note();
    }
  }
  return g.condition.kind == AcceptanceKind::Safety ? !marked_seen : marked_seen;
}

}  // namespace delcon::testutil
