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

#include "delcon/solve_delay.hpp"

#include <cstdlib>
#include <deque>
#include <map>

#include "delcon/builtins.hpp"
#include "delcon/transforms.hpp"

namespace delcon {

std::size_t reduction_budget() {
  if (const char* env = std::getenv("DELCON_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

ReducedGame reduce_lookahead(const DelayGame& dg) {
  auto errs = validate(dg);
  if (!errs.empty()) throw validation_error(errs.front());
  std::size_t budget = reduction_budget();
  std::size_t ni = dg.iletters.size();
  std::size_t estimate = 0, per_len = 1;
  for (int i = 0; i <= dg.lookahead + 1; ++i) {
    if (per_len > budget || estimate > budget) {
      estimate = budget + 1;
      break;
    }
    estimate += per_len;
    per_len *= ni;
  }
  if (estimate <= budget / dg.condition.num_states())
    estimate *= dg.condition.num_states();
  else
    estimate = budget + 1;
  if (estimate > budget)
    throw budget_error("lookahead reduction needs about " +
                       std::to_string(estimate) + " vertices, budget is " +
                       std::to_string(budget));

  const OmegaAutomaton& cond = dg.condition;
  int nc = static_cast<int>(ni);
  ReducedGame r;
  r.game.kind = cond.kind;
  r.game.labels = dg.iletters;
  r.game.labels.insert(r.game.labels.end(), dg.oletters.begin(),
                       dg.oletters.end());

  using Key = std::pair<int, std::vector<int>>;
  std::map<Key, int> index;
  std::deque<Key> work;
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    std::string name = cond.state_names[k.first];
    for (int l : k.second) name += "|" + dg.iletters[l];
    bool o_turn = static_cast<int>(k.second.size()) == dg.lookahead + 1;
    int v = r.game.add_vertex(name, o_turn ? 0 : 1);
    if (cond.kind == AcceptanceKind::Parity)
      r.game.color[v] = cond.color[k.first];
    else
      r.game.marked[v] = cond.marked[k.first];
    r.cond_state.push_back(k.first);
    r.buffer.push_back(k.second);
    index[k] = v;
    work.push_back(k);
    return v;
  };
  r.game.initial = intern({cond.initial, {}});
  while (!work.empty()) {
    Key k = work.front();
    work.pop_front();
    int from = index[k];
    if (static_cast<int>(k.second.size()) <= dg.lookahead) {
      for (int a = 0; a < nc; ++a) {
        auto buf = k.second;
        buf.push_back(a);
        int to = intern({k.first, buf});
        r.game.succ[from].push_back({to, a});
      }
    } else {
      for (std::size_t b = 0; b < dg.oletters.size(); ++b) {
        int pl = cond.letter_index(
            pair_letter(dg.iletters[k.second.front()], dg.oletters[b]));
        int q2 = cond.next[k.first][pl];
        std::vector<int> buf(k.second.begin() + 1, k.second.end());
        int to = intern({q2, buf});
        r.game.succ[from].push_back({to, nc + static_cast<int>(b)});
      }
    }
  }
  return r;
}

namespace {

// The solver leaves no move witness on vertices whose outcome is already
// fixed by every path into them; any edge preserves the win there.
int chosen_edge(const Solution& sol, int v) {
  return sol.strategy[v] >= 0 ? sol.strategy[v] : 0;
}

StrategyMachine project_player_o(const DelayGame& dg, const ReducedGame& r,
                                 const Solution& sol) {
  int nc = static_cast<int>(dg.iletters.size());
  StrategyMachine m;
  m.side = StrategyMachine::Side::Responder;
  m.lead_in = dg.lookahead;
  m.in_letters = dg.iletters;
  m.out_letters = dg.oletters;
  m.memory_names.clear();

  std::map<int, int> mem_of;  // I-turn vertex -> memory index
  std::deque<int> work;
  auto intern = [&](int v) {
    auto it = mem_of.find(v);
    if (it != mem_of.end()) return it->second;
    int id = static_cast<int>(m.memory_names.size());
    m.memory_names.push_back(r.game.vertex_names[v]);
    mem_of[v] = id;
    work.push_back(v);
    return id;
  };
  m.memory_init = intern(r.game.initial);
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    int mem = mem_of[v];
    bool silent = static_cast<int>(r.buffer[v].size()) < dg.lookahead;
    for (int a = 0; a < nc; ++a) {
      const auto& e = r.game.succ[v][a];
      if (silent) {
        int to = intern(e.to);
        if (to != mem) m.update[{mem, a, StrategyMachine::kEps}] = to;
        continue;
      }
      // The successor is Player O's turn; play the positional choice.
      const auto& oe = r.game.succ[e.to][chosen_edge(sol, e.to)];
      int b = oe.label - nc;
      m.output[{mem, a}] = {{b, Rat(1)}};
      int to = intern(oe.to);
      if (to != mem) m.update[{mem, a, b}] = to;
    }
  }
  return m;
}

StrategyMachine project_player_i(const DelayGame& dg, const ReducedGame& r,
                                 const Solution& sol) {
  int nc = static_cast<int>(dg.iletters.size());
  StrategyMachine m;
  m.side = StrategyMachine::Side::Emitter;
  m.in_letters = dg.oletters;
  m.out_letters = dg.iletters;
  m.memory_names.clear();

  std::vector<int> block;
  int v = r.game.initial;
  while (static_cast<int>(r.buffer[v].size()) <= dg.lookahead) {
    const auto& e = r.game.succ[v][chosen_edge(sol, v)];
    block.push_back(e.label);
    v = e.to;
  }
  m.init_blocks.emplace_back(block, Rat(1));

  std::map<int, int> mem_of;  // O-turn vertex -> memory index
  std::deque<int> work;
  auto intern = [&](int u) {
    auto it = mem_of.find(u);
    if (it != mem_of.end()) return it->second;
    int id = static_cast<int>(m.memory_names.size());
    m.memory_names.push_back(r.game.vertex_names[u]);
    mem_of[u] = id;
    work.push_back(u);
    return id;
  };
  m.memory_init = intern(v);
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    int mem = mem_of[u];
    for (std::size_t b = 0; b < dg.oletters.size(); ++b) {
      int v1 = r.game.succ[u][b].to;
      const auto& ie = r.game.succ[v1][chosen_edge(sol, v1)];
      int a = ie.label;
      m.output[{mem, static_cast<int>(b)}] = {{a, Rat(1)}};
      int to = intern(ie.to);
      if (to != mem) m.update[{mem, static_cast<int>(b), a}] = to;
    }
  }
  return m;
}

}  // namespace

DelaySolveResult solve_delay_game(const DelayGame& dg, bool want_machine) {
  ReducedGame r = reduce_lookahead(dg);
  Solution sol = solve(r.game);
  DelaySolveResult out;
  out.reduced_vertices = static_cast<std::size_t>(r.game.num_vertices());
  bool o_wins = sol.winner[r.game.initial] == 0;
  out.winner = o_wins ? PlayerRole::PlayerO : PlayerRole::PlayerI;
  if (want_machine)
    out.machine = o_wins ? project_player_o(dg, r, sol)
                         : project_player_i(dg, r, sol);
  return out;
}

DcSolveResult solve_delayed_control(const DelayedControlGame& g, int delta,
                                    bool want_machine) {
  TransformReceipt receipt;
  DelayGame dg = dc_to_delay_game(g, delta, &receipt);
  DelaySolveResult res = solve_delay_game(dg, want_machine);
  DcSolveResult out;
  out.reduced_vertices = res.reduced_vertices;
  out.controller_wins = res.winner == PlayerRole::PlayerI;
  if (res.machine) {
    out.machine = out.controller_wins
                      ? lift_I_to_controller(*res.machine, delta / 2, receipt)
                      : *res.machine;
  }
  return out;
}

EnvSolveResult solve_environment(const DelayedControlGame& g) {
  auto errs = validate(g);
  if (!errs.empty()) throw validation_error(errs.front());
  GraphGame gg = product_game(g.arena, g.condition);
  Solution sol = solve(gg);
  EnvSolveResult out;
  out.environment_wins = sol.winner[gg.initial] == 1;
  if (!out.environment_wins) return out;

  int nc = static_cast<int>(g.arena.cletters.size());
  StrategyMachine m;
  m.side = StrategyMachine::Side::Responder;
  m.in_letters = g.arena.cletters;
  m.out_letters = g.arena.eletters;
  m.memory_names.clear();
  std::map<int, int> mem_of;
  std::deque<int> work;
  auto intern = [&](int v) {
    auto it = mem_of.find(v);
    if (it != mem_of.end()) return it->second;
    int id = static_cast<int>(m.memory_names.size());
    m.memory_names.push_back(gg.vertex_names[v]);
    mem_of[v] = id;
    work.push_back(v);
    return id;
  };
  m.memory_init = intern(gg.initial);
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    int mem = mem_of[v];
    for (int a = 0; a < nc; ++a) {
      int w = gg.succ[v][a].to;
      const auto& ee = gg.succ[w][chosen_edge(sol, w)];
      int b = ee.label - nc;
      m.output[{mem, a}] = {{b, Rat(1)}};
      int to = intern(ee.to);
      if (to != mem) m.update[{mem, a, b}] = to;
    }
  }
  out.machine = std::move(m);
  return out;
}

PureVerdict classify_pure(const DelayedControlGame& g, int delta) {
  if (solve_delayed_control(g, delta, false).controller_wins)
    return PureVerdict::ControllerSure;
  if (solve_environment(g).environment_wins) return PureVerdict::EnvSure;
  return PureVerdict::UndeterminedPure;
}

std::string to_string(PureVerdict v) {
  switch (v) {
    case PureVerdict::ControllerSure: return "ControllerSure";
    case PureVerdict::EnvSure: return "EnvSure";
    case PureVerdict::UndeterminedPure: return "UndeterminedPure";
  }
  return "?";
}

DecisiveBound decisive_bound(const DelayedControlGame& g) {
  DecisiveBound b;
  int n = g.condition.num_states();
  switch (g.condition.kind) {
    case AcceptanceKind::Safety:
      b.delta = BigInt(2) << size_of(g);
      b.quality = DecisiveBound::Quality::PaperExact;
      break;
    case AcceptanceKind::Reachability:
      b.delta = BigInt(2) << (n * n);
      b.quality = DecisiveBound::Quality::BigOHeuristic;
      break;
    case AcceptanceKind::Parity:
      b.delta = BigInt(2) << (n * n * n);
      b.quality = DecisiveBound::Quality::BigOHeuristic;
      break;
  }
  return b;
}

DeltaSweep sweep_delta(const DelayedControlGame& g, int cap) {
  if (cap < 0 || cap % 2 != 0) throw usage_error("cap must be even");
  DeltaSweep sweep;
  auto wins = [&](int delta) {
    bool w = solve_delayed_control(g, delta, false).controller_wins;
    sweep.tested.emplace_back(delta, w);
    return w;
  };
  if (!wins(0)) {
    sweep.verdict = DeltaSweep::Verdict::NoneUpToCap;
    return sweep;
  }
  int lo = 0;  // known winning
  int hi = cap;
  if (cap > 0 && wins(cap)) {
    lo = cap;
  } else {
    // Largest winning delta lies in [lo, hi); winning delays are
    // downward closed, verified pointwise at the endpoints above.
    while (hi - lo > 2) {
      int mid = (lo + hi) / 2;
      if (mid % 2 != 0) ++mid;
      if (mid == hi) mid -= 2;
      if (wins(mid))
        lo = mid;
      else
        hi = mid;
    }
  }
  sweep.max_winning_delta = lo;
  DecisiveBound bound = decisive_bound(g);
  if (BigInt(lo) >= bound.delta) {
    sweep.verdict = DeltaSweep::Verdict::AllDelays;
    sweep.bound = bound;
  } else {
    sweep.verdict = DeltaSweep::Verdict::ThresholdInCap;
  }
  return sweep;
}

LookaheadSweep sweep_lookahead(const DelayGame& dg, int cap) {
  if (cap < 0) throw usage_error("cap must be nonnegative");
  LookaheadSweep sweep;
  auto o_wins = [&](int k) {
    bool w = solve_delay_game(with_lookahead(dg, k), false).winner ==
             PlayerRole::PlayerO;
    sweep.tested.emplace_back(k, w);
    return w;
  };
  if (o_wins(0)) {
    sweep.found = true;
    sweep.min_winning_k = 0;
    return sweep;
  }
  if (cap == 0 || !o_wins(cap)) return sweep;
  int lo = 0;  // known losing
  int hi = cap;  // known winning
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (o_wins(mid))
      hi = mid;
    else
      lo = mid;
  }
  sweep.found = true;
  sweep.min_winning_k = hi;
  return sweep;
}

}  // namespace delcon
