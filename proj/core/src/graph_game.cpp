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

#include "delcon/graph_game.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "delcon/arena.hpp"

namespace delcon {

int GraphGame::add_vertex(std::string name, int who) {
  vertex_names.push_back(std::move(name));
  owner.push_back(who);
  succ.emplace_back();
  marked.push_back(0);
  color.push_back(0);
  return num_vertices() - 1;
}

std::vector<std::string> validate(const GraphGame& g) {
  std::vector<std::string> errs;
  int n = g.num_vertices();
  if (n == 0) errs.push_back("game has no vertices");
  if (g.initial < 0 || g.initial >= n)
    errs.push_back("initial vertex out of range");
  for (int v = 0; v < n; ++v) {
    if (g.owner[v] != 0 && g.owner[v] != 1)
      errs.push_back("bad owner at " + g.vertex_names[v]);
    if (g.succ[v].empty())
      errs.push_back("vertex " + g.vertex_names[v] + " has no moves");
    for (const auto& e : g.succ[v])
      if (e.to < 0 || e.to >= n)
        errs.push_back("edge out of range at " + g.vertex_names[v]);
  }
  return errs;
}

namespace {

struct MaskedAttractor {
  std::vector<char> in;
  std::vector<int> strategy;
};

MaskedAttractor attract(const GraphGame& g, int player,
                        const std::vector<char>& targets,
                        const std::vector<char>& alive) {
  int n = g.num_vertices();
  MaskedAttractor r{std::vector<char>(n, 0), std::vector<int>(n, -1)};
  std::vector<int> cnt(n, 0);
  std::vector<std::vector<std::pair<int, int>>> pred(n);  // (src, edge idx)
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int i = 0; i < static_cast<int>(g.succ[v].size()); ++i) {
      int w = g.succ[v][i].to;
      if (!alive[w]) continue;
      ++cnt[v];
      pred[w].emplace_back(v, i);
    }
  }
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (alive[v] && targets[v]) {
      r.in[v] = 1;
      q.push_back(v);
    }
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (auto [v, i] : pred[w]) {
      if (r.in[v]) continue;
      if (g.owner[v] == player) {
        r.in[v] = 1;
        r.strategy[v] = i;
        q.push_back(v);
      } else if (--cnt[v] == 0) {
        r.in[v] = 1;
        q.push_back(v);
      }
    }
  }
  return r;
}

int any_edge_into(const GraphGame& g, int v, const std::vector<char>& ok) {
  for (int i = 0; i < static_cast<int>(g.succ[v].size()); ++i)
    if (ok[g.succ[v][i].to]) return i;
  return -1;
}

void zielonka(const GraphGame& g, const std::vector<char>& alive,
              std::vector<int>& winner, std::vector<int>& strategy) {
  int n = g.num_vertices();
  int d = -1;
  for (int v = 0; v < n; ++v)
    if (alive[v]) d = std::max(d, g.color[v]);
  if (d < 0) return;
  int p = d % 2;

  std::vector<char> tops(n, 0);
  for (int v = 0; v < n; ++v)
    if (alive[v] && g.color[v] == d) tops[v] = 1;
  auto a = attract(g, p, tops, alive);

  std::vector<char> sub = alive;
  for (int v = 0; v < n; ++v)
    if (a.in[v]) sub[v] = 0;
  std::vector<int> w1(n, -1), s1(n, -1);
  zielonka(g, sub, w1, s1);

  bool opp_empty = true;
  for (int v = 0; v < n; ++v)
    if (sub[v] && w1[v] == 1 - p) opp_empty = false;

  if (opp_empty) {
    std::vector<char> all_won(n, 0);
    for (int v = 0; v < n; ++v)
      if (alive[v]) all_won[v] = 1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      winner[v] = p;
      if (g.owner[v] != p) {
        strategy[v] = -1;
      } else if (sub[v]) {
        strategy[v] = s1[v];
      } else if (a.strategy[v] >= 0) {
        strategy[v] = a.strategy[v];
      } else {
        strategy[v] = any_edge_into(g, v, all_won);
      }
    }
    return;
  }

  std::vector<char> oppw(n, 0);
  for (int v = 0; v < n; ++v)
    if (sub[v] && w1[v] == 1 - p) oppw[v] = 1;
  auto b = attract(g, 1 - p, oppw, alive);
  std::vector<char> rest = alive;
  for (int v = 0; v < n; ++v)
    if (b.in[v]) rest[v] = 0;
  std::vector<int> w2(n, -1), s2(n, -1);
  zielonka(g, rest, w2, s2);

  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (rest[v]) {
      winner[v] = w2[v];
      strategy[v] = s2[v];
    } else {
      winner[v] = 1 - p;
      if (g.owner[v] != 1 - p)
        strategy[v] = -1;
      else if (oppw[v])
        strategy[v] = s1[v];
      else
        strategy[v] = b.strategy[v];
    }
  }
}

}  // namespace

AttractorResult attractor(const GraphGame& g, int player,
                          const std::vector<char>& targets) {
  std::vector<char> alive(g.num_vertices(), 1);
  auto r = attract(g, player, targets, alive);
  return {r.in, r.strategy};
}

Solution solve(const GraphGame& g) {
  auto errs = validate(g);
  if (!errs.empty()) throw validation_error(errs.front());
  int n = g.num_vertices();
  Solution sol{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::vector<char> alive(n, 1);

  if (g.kind == AcceptanceKind::Parity) {
    zielonka(g, alive, sol.winner, sol.strategy);
    return sol;
  }

  // Safety: P1 attracts to marked; reachability: P0 does.
  int reacher = g.kind == AcceptanceKind::Safety ? 1 : 0;
  auto a = attract(g, reacher, g.marked, alive);
  std::vector<char> safe(n, 0);
  for (int v = 0; v < n; ++v) safe[v] = !a.in[v];
  for (int v = 0; v < n; ++v) {
    sol.winner[v] = a.in[v] ? reacher : 1 - reacher;
    if (g.owner[v] == reacher && a.in[v])
      sol.strategy[v] =
          a.strategy[v] >= 0 ? a.strategy[v] : any_edge_into(g, v, alive);
    if (g.owner[v] != reacher && !a.in[v])
      sol.strategy[v] = any_edge_into(g, v, safe);
  }
  return sol;
}

namespace {

std::vector<char> reachable_in(const GraphGame& g, int from,
                               const std::vector<char>& mask) {
  std::vector<char> r(g.num_vertices(), 0);
  if (!mask[from]) return r;
  std::deque<int> q{from};
  r[from] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& e : g.succ[v])
      if (mask[e.to] && !r[e.to]) {
        r[e.to] = 1;
        q.push_back(e.to);
      }
  }
  return r;
}

// Shortest vertex path within mask; includes both endpoints.
std::optional<std::vector<int>> path_in(const GraphGame& g, int from, int to,
                                        const std::vector<char>& mask,
                                        bool require_step) {
  if (!mask[from]) return std::nullopt;
  if (!require_step && from == to) return std::vector<int>{from};
  std::vector<int> pre(g.num_vertices(), -2);
  pre[from] = -1;
  std::deque<int> q{from};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& e : g.succ[v]) {
      if (!mask[e.to]) continue;
      if (e.to == to) {
        std::vector<int> path{to};
        for (int x = v; x != -1; x = pre[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (pre[e.to] != -2) continue;
      pre[e.to] = v;
      q.push_back(e.to);
    }
  }
  return std::nullopt;
}

std::optional<VertexLasso> lasso_through(const GraphGame& g, int from,
                                         int via,
                                         const std::vector<char>& stem_mask,
                                         const std::vector<char>& cycle_mask) {
  auto stem = path_in(g, from, via, stem_mask, false);
  if (!stem) return std::nullopt;
  auto loop = path_in(g, via, via, cycle_mask, true);
  if (!loop) return std::nullopt;
  VertexLasso r;
  r.stem = *stem;
  r.cycle = *loop;
  r.cycle.pop_back();  // drop the repeated entry vertex
  return r;
}

}  // namespace

std::optional<VertexLasso> find_violation(const GraphGame& g, int from,
                                          const std::vector<char>& allowed) {
  int n = g.num_vertices();
  auto reach = reachable_in(g, from, allowed);
  switch (g.kind) {
    case AcceptanceKind::Safety: {
      // Any visit of a marked vertex violates; close a loop afterwards.
      for (int m = 0; m < n; ++m) {
        if (!reach[m] || !g.marked[m]) continue;
        auto head = path_in(g, from, m, allowed, false);
        if (!head) continue;
        auto after = reachable_in(g, m, allowed);
        for (int u = 0; u < n; ++u) {
          if (!after[u]) continue;
          auto tail = path_in(g, m, u, allowed, false);
          auto loop = path_in(g, u, u, allowed, true);
          if (!tail || !loop) continue;
          VertexLasso r;
          r.stem = *head;
          r.stem.insert(r.stem.end(), tail->begin() + 1, tail->end());
          r.cycle = *loop;
          r.cycle.pop_back();
          return r;
        }
      }
      return std::nullopt;
    }
    case AcceptanceKind::Reachability: {
      // A marked-avoiding lasso violates.
      std::vector<char> avoid = allowed;
      for (int v = 0; v < n; ++v)
        if (g.marked[v]) avoid[v] = 0;
      auto r = reachable_in(g, from, avoid);
      for (int u = 0; u < n; ++u) {
        if (!r[u]) continue;
        if (auto l = lasso_through(g, from, u, avoid, avoid)) return l;
      }
      return std::nullopt;
    }
    case AcceptanceKind::Parity: {
      int maxc = 0;
      for (int v = 0; v < n; ++v)
        if (reach[v]) maxc = std::max(maxc, g.color[v]);
      for (int c = 1; c <= maxc; c += 2) {
        std::vector<char> low = allowed;
        for (int v = 0; v < n; ++v)
          if (g.color[v] > c) low[v] = 0;
        for (int u = 0; u < n; ++u) {
          if (!reach[u] || !low[u] || g.color[u] != c) continue;
          if (auto l = lasso_through(g, from, u, allowed, low)) return l;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

GraphGame product_game(const Arena& arena, const OmegaAutomaton& cond) {
  GraphGame g;
  g.kind = cond.kind;
  int nc = static_cast<int>(arena.cletters.size());
  g.labels = arena.cletters;
  g.labels.insert(g.labels.end(), arena.eletters.begin(), arena.eletters.end());

  int nq = cond.num_states();
  std::vector<int> id(arena.num_states() * nq, -1);
  std::deque<std::pair<int, int>> work;
  auto intern = [&](int s, int q) {
    int& slot = id[s * nq + q];
    if (slot >= 0) return slot;
    slot = g.add_vertex(arena.state_names[s] + "|" + cond.state_names[q],
                        arena.owner[s] == Owner::Controller ? 0 : 1);
    g.marked[slot] =
        cond.kind == AcceptanceKind::Parity ? 0 : cond.marked[q];
    g.color[slot] = cond.kind == AcceptanceKind::Parity ? cond.color[q] : 0;
    work.emplace_back(s, q);
    return slot;
  };
  g.initial = intern(arena.initial, cond.initial);
  while (!work.empty()) {
    auto [s, q] = work.front();
    work.pop_front();
    int from = id[s * nq + q];
    bool ctrl = arena.owner[s] == Owner::Controller;
    int nl = static_cast<int>(arena.alphabet_of(s).size());
    for (int l = 0; l < nl; ++l) {
      int s2 = arena.next[s][l];
      int q2 = cond.next[q][cond.letter_index(arena.state_names[s2])];
      int to = intern(s2, q2);
      g.succ[from].push_back({to, ctrl ? l : nc + l});
    }
  }
  return g;
}

}  // namespace delcon
