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

#include "delcon/verify.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "delcon/graph_game.hpp"

namespace delcon {

namespace {

// Product of machine configurations and game state with every opposing
// choice (and every letter in the machine's own support) as a branch.
// A machine wins surely iff no reachable lasso violates the want-accept
// condition.
struct ConfigGraph {
  GraphGame g;  // owners unused; marked/color filled from the condition
  std::vector<int> initials;

  int intern_label(const std::string& l) {
    int i = index_of(g.labels, l);
    if (i >= 0) return i;
    g.labels.push_back(l);
    return static_cast<int>(g.labels.size()) - 1;
  }
  void set_acceptance(int v, const OmegaAutomaton& cond, int q) {
    if (cond.kind == AcceptanceKind::Parity)
      g.color[v] = cond.color[q];
    else
      g.marked[v] = cond.marked[q];
  }
};

VerifyResult analyze(ConfigGraph& cg) {
  VerifyResult r;
  r.ok = true;
  // Dead ends cannot occur in these products; guard anyway.
  std::vector<char> all(cg.g.num_vertices(), 1);
  for (int v0 : cg.initials) {
    auto viol = find_violation(cg.g, v0, all);
    if (!viol) continue;
    r.ok = false;
    auto letters_of = [&](const std::vector<int>& vs, int wrap,
                          std::vector<std::string>& out) {
      for (std::size_t i = 0; i + 1 < vs.size() || (wrap >= 0 && i < vs.size());
           ++i) {
        int u = vs[i];
        int w = i + 1 < vs.size() ? vs[i + 1] : wrap;
        for (const auto& e : cg.g.succ[u])
          if (e.to == w) {
            if (e.label >= 0) out.push_back(cg.g.labels[e.label]);
            break;
          }
      }
    };
    letters_of(viol->stem, -1, r.stem);
    letters_of(viol->cycle, viol->cycle.front(), r.cycle);
    return r;
  }
  return r;
}

// Machine block emission: memory after emitting the whole block.
int mem_after_block(const StrategyMachine& s, const std::vector<int>& block) {
  int m = s.memory_init;
  for (int l : block) m = step_block(s, m, l);
  return m;
}

void check_shape(bool cond, const std::string& msg) {
  if (!cond) throw usage_error(msg);
}

using Buf = std::vector<int>;

VerifyResult verify_dc_controller(const DelayedControlGame& g, int delta,
                                  const StrategyMachine& s) {
  check_shape(delta >= 0 && delta % 2 == 0, "delay must be even");
  check_shape(s.side == StrategyMachine::Side::Emitter,
              "controller machine must be an emitter");
  check_shape(s.in_letters == g.arena.eletters &&
                  s.out_letters == g.arena.cletters,
              "machine alphabets do not match the game");
  check_shape(s.block_length() == delta / 2 + 1,
              "initial block does not match the delay");
  const Arena& a = g.arena;
  const OmegaAutomaton& cond = g.condition;

  // phase 0: controller's turn (buffer front is committed); phase 1:
  // environment's turn.
  using Key = std::tuple<int, int, int, int, Buf>;  // phase, s, q, mem, buf
  ConfigGraph cg;
  cg.g.kind = cond.kind;
  std::map<Key, int> index;
  std::deque<Key> work;
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int v = cg.g.add_vertex("", 0);
    cg.set_acceptance(v, cond, std::get<2>(k));
    index[k] = v;
    work.push_back(k);
    return v;
  };
  for (const auto& [block, p] : s.init_blocks)
    cg.initials.push_back(
        intern({0, a.initial, cond.initial, mem_after_block(s, block), block}));
  while (!work.empty()) {
    Key k = work.front();
    work.pop_front();
    auto [phase, st, q, mem, buf] = k;
    int from = index[k];
    if (phase == 0) {
      int ca = buf.front();
      Buf rest(buf.begin() + 1, buf.end());
      int s2 = a.next[st][ca];
      int q2 = cond.next[q][cond.letter_index(a.state_names[s2])];
      int lbl = cg.intern_label(a.cletters[ca]);
      int to = intern({1, s2, q2, mem, rest});
      cg.g.succ[from].push_back({to, lbl});
    } else {
      for (std::size_t eb = 0; eb < a.eletters.size(); ++eb) {
        int s2 = a.next[st][eb];
        int q2 = cond.next[q][cond.letter_index(a.state_names[s2])];
        int lbl = cg.intern_label(a.eletters[eb]);
        for (const auto& [out, p] : s.out_dist(mem, static_cast<int>(eb))) {
          Buf nb = buf;
          nb.push_back(out);
          int m2 = s.next_mem(mem, static_cast<int>(eb), out);
          int to = intern({0, s2, q2, m2, nb});
          cg.g.succ[from].push_back({to, lbl});
        }
      }
    }
  }
  return analyze(cg);
}

VerifyResult verify_dc_environment(const DelayedControlGame& g,
                                   const StrategyMachine& s) {
  check_shape(s.side == StrategyMachine::Side::Responder && s.lead_in == 0,
              "environment machine must be a lead-in-free responder");
  check_shape(s.in_letters == g.arena.cletters &&
                  s.out_letters == g.arena.eletters,
              "machine alphabets do not match the game");
  const Arena& a = g.arena;
  // The environment opposes the controller's condition.
  OmegaAutomaton cond = complement_of(g.condition);

  using Key = std::tuple<int, int, int, int>;  // phase, s, q, mem (+pending)
  ConfigGraph cg;
  cg.g.kind = cond.kind;
  std::map<std::pair<Key, int>, int> index;
  std::deque<std::pair<Key, int>> work;
  auto intern = [&](Key k, int pending) {
    auto key = std::make_pair(k, pending);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int v = cg.g.add_vertex("", 0);
    cg.set_acceptance(v, cond, std::get<2>(k));
    index[key] = v;
    work.push_back(key);
    return v;
  };
  cg.initials.push_back(intern({0, a.initial, cond.initial, s.memory_init}, -1));
  while (!work.empty()) {
    auto [k, pending] = work.front();
    work.pop_front();
    auto [phase, st, q, mem] = k;
    int from = index[{k, pending}];
    if (phase == 0) {
      for (std::size_t ca = 0; ca < a.cletters.size(); ++ca) {
        int s2 = a.next[st][ca];
        int q2 = cond.next[q][cond.letter_index(a.state_names[s2])];
        int lbl = cg.intern_label(a.cletters[ca]);
        int to = intern({1, s2, q2, mem}, static_cast<int>(ca));
        cg.g.succ[from].push_back({to, lbl});
      }
    } else {
      for (const auto& [eb, p] : s.out_dist(mem, pending)) {
        int s2 = a.next[st][eb];
        int q2 = cond.next[q][cond.letter_index(a.state_names[s2])];
        int lbl = cg.intern_label(a.eletters[eb]);
        int m2 = s.next_mem(mem, pending, eb);
        int to = intern({0, s2, q2, m2}, -1);
        cg.g.succ[from].push_back({to, lbl});
      }
    }
  }
  return analyze(cg);
}

VerifyResult verify_dg_player_i(const DelayGame& dg, const StrategyMachine& s) {
  check_shape(s.side == StrategyMachine::Side::Emitter,
              "Player I machine must be an emitter");
  check_shape(s.in_letters == dg.oletters && s.out_letters == dg.iletters,
              "machine alphabets do not match the game");
  check_shape(s.block_length() == dg.lookahead + 1,
              "initial block does not match the lookahead");
  // Player I opposes the condition.
  OmegaAutomaton cond = complement_of(dg.condition);

  using Key = std::tuple<int, int, Buf>;  // q, mem, pending own letters
  ConfigGraph cg;
  cg.g.kind = cond.kind;
  std::map<Key, int> index;
  std::deque<Key> work;
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int v = cg.g.add_vertex("", 0);
    cg.set_acceptance(v, cond, std::get<0>(k));
    index[k] = v;
    work.push_back(k);
    return v;
  };
  for (const auto& [block, p] : s.init_blocks)
    cg.initials.push_back(intern({cond.initial, mem_after_block(s, block), block}));
  while (!work.empty()) {
    Key k = work.front();
    work.pop_front();
    auto [q, mem, buf] = k;
    int from = index[k];
    for (std::size_t ob = 0; ob < dg.oletters.size(); ++ob) {
      std::string pl = pair_letter(dg.iletters[buf.front()], dg.oletters[ob]);
      int q2 = cond.next[q][cond.letter_index(pl)];
      int lbl = cg.intern_label(pl);
      for (const auto& [out, p] : s.out_dist(mem, static_cast<int>(ob))) {
        Buf nb(buf.begin() + 1, buf.end());
        nb.push_back(out);
        int m2 = s.next_mem(mem, static_cast<int>(ob), out);
        int to = intern({q2, m2, nb});
        cg.g.succ[from].push_back({to, lbl});
      }
    }
  }
  return analyze(cg);
}

VerifyResult verify_dg_player_o(const DelayGame& dg, const StrategyMachine& s) {
  check_shape(s.side == StrategyMachine::Side::Responder,
              "Player O machine must be a responder");
  check_shape(s.lead_in == dg.lookahead,
              "lead-in does not match the lookahead");
  check_shape(s.in_letters == dg.iletters && s.out_letters == dg.oletters,
              "machine alphabets do not match the game");
  const OmegaAutomaton& cond = dg.condition;

  using Key = std::tuple<int, int, Buf>;  // q, mem, unpaired input letters
  ConfigGraph cg;
  cg.g.kind = cond.kind;
  std::map<Key, int> index;
  std::deque<Key> work;
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int v = cg.g.add_vertex("", 0);
    cg.set_acceptance(v, cond, std::get<0>(k));
    index[k] = v;
    work.push_back(k);
    return v;
  };
  cg.initials.push_back(intern({cond.initial, s.memory_init, {}}));
  while (!work.empty()) {
    Key k = work.front();
    work.pop_front();
    auto [q, mem, buf] = k;
    int from = index[k];
    for (std::size_t ia = 0; ia < dg.iletters.size(); ++ia) {
      if (static_cast<int>(buf.size()) < dg.lookahead) {
        // Lead-in: the letter is granted but not yet answered.
        Buf nb = buf;
        nb.push_back(static_cast<int>(ia));
        int m2 = s.next_mem(mem, static_cast<int>(ia), StrategyMachine::kEps);
        int to = intern({q, m2, nb});
        cg.g.succ[from].push_back({to, -1});
        continue;
      }
      for (const auto& [ob, p] : s.out_dist(mem, static_cast<int>(ia))) {
        std::string pl = pair_letter(dg.iletters[buf.empty() ? ia : buf.front()],
                                     dg.oletters[ob]);
        int q2 = cond.next[q][cond.letter_index(pl)];
        int lbl = cg.intern_label(pl);
        Buf nb = buf;
        nb.push_back(static_cast<int>(ia));
        nb.erase(nb.begin());
        int m2 = s.next_mem(mem, static_cast<int>(ia), ob);
        int to = intern({q2, m2, nb});
        cg.g.succ[from].push_back({to, lbl});
      }
    }
  }
  return analyze(cg);
}

}  // namespace

VerifyResult verify_strategy(const DelayedControlGame& g, int delta,
                             const StrategyMachine& s, PlayerRole role) {
  auto errs = validate(g);
  if (!errs.empty()) throw validation_error(errs.front());
  auto merrs = validate(s);
  if (!merrs.empty()) throw validation_error(merrs.front());
  switch (role) {
    case PlayerRole::Controller: return verify_dc_controller(g, delta, s);
    case PlayerRole::Environment: return verify_dc_environment(g, s);
    default:
      throw usage_error("role does not apply to a delayed-control game");
  }
}

VerifyResult verify_strategy(const DelayGame& dg, const StrategyMachine& s,
                             PlayerRole role) {
  auto errs = validate(dg);
  if (!errs.empty()) throw validation_error(errs.front());
  auto merrs = validate(s);
  if (!merrs.empty()) throw validation_error(merrs.front());
  switch (role) {
    case PlayerRole::PlayerI: return verify_dg_player_i(dg, s);
    case PlayerRole::PlayerO: return verify_dg_player_o(dg, s);
    default:
      throw usage_error("role does not apply to a delay game");
  }
}

}  // namespace delcon
