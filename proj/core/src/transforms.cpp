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

#include "delcon/transforms.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace delcon {

namespace {

struct PairKey {
  int s, q, c;
  auto operator<=>(const PairKey&) const = default;
};

}  // namespace

OmegaAutomaton dc_to_condition(const DelayedControlGame& g) {
  auto errs = validate(g);
  if (!errs.empty()) throw validation_error(errs.front());
  const Arena& a = g.arena;
  OmegaAutomaton cond = saturated(g.condition);
  bool parity = cond.kind == AcceptanceKind::Parity;

  OmegaAutomaton r;
  r.kind = cond.kind;
  r.letters = pair_alphabet(a.cletters, a.eletters);
  int ne = static_cast<int>(a.eletters.size());

  std::map<PairKey, int> index;
  std::deque<PairKey> work;
  auto intern = [&](PairKey k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    std::string name = a.state_names[k.s] + "|" + cond.state_names[k.q];
    if (parity) name += "|" + std::to_string(k.c);
    int id = r.add_state(name);
    if (parity)
      r.color[id] = k.c;
    else
      r.marked[id] = cond.marked[k.q];
    index[k] = id;
    work.push_back(k);
    return id;
  };

  PairKey init{a.initial, cond.initial,
               parity ? cond.color[cond.initial] : 0};
  r.initial = intern(init);
  while (!work.empty()) {
    PairKey k = work.front();
    work.pop_front();
    int from = index[k];
    for (std::size_t ca = 0; ca < a.cletters.size(); ++ca) {
      int s1 = a.next[k.s][ca];
      int q1 = cond.next[k.q][cond.letter_index(a.state_names[s1])];
      for (int eb = 0; eb < ne; ++eb) {
        int s2 = a.next[s1][eb];
        int q2 = cond.next[q1][cond.letter_index(a.state_names[s2])];
        int c = parity ? std::max(cond.color[q1], cond.color[q2]) : 0;
        int to = intern({s2, q2, c});
        r.next[from][ca * ne + eb] = to;
      }
    }
  }
  return normalize_colors(r);
}

DelayGame dc_to_delay_game(const DelayedControlGame& g, int delta,
                           TransformReceipt* receipt) {
  if (delta < 0 || delta % 2 != 0) throw usage_error("delay must be even");
  OmegaAutomaton win = dc_to_condition(g);
  DelayGame dg = make_delay_game(delta / 2, g.arena.cletters,
                                 g.arena.eletters, complement_of(win));
  if (receipt) {
    receipt->direction = TransformReceipt::Direction::DcToDg;
    receipt->renaming = dg.renamed;
    receipt->input_condition_states = g.condition.num_states();
    receipt->output_condition_states = dg.condition.num_states();
  }
  return dg;
}

DgToDcResult dg_to_dc(const DelayGame& dg) {
  auto errs = validate(dg);
  if (!errs.empty()) throw validation_error(errs.front());
  DgToDcResult out;
  out.delta = 2 * dg.lookahead;
  out.receipt.direction = TransformReceipt::Direction::DgToDc;
  out.receipt.renaming = dg.renamed;
  out.receipt.input_condition_states = dg.condition.num_states();

  Arena a;
  a.cletters = dg.iletters;
  a.eletters = dg.oletters;
  std::string start = primed_fresh("start", dg.iletters);
  start = primed_fresh(start, dg.oletters);
  int s0 = a.add_state(start, Owner::Controller);
  std::vector<int> istate(dg.iletters.size()), ostate(dg.oletters.size());
  for (std::size_t i = 0; i < dg.iletters.size(); ++i)
    istate[i] = a.add_state(dg.iletters[i], Owner::Environment);
  for (std::size_t o = 0; o < dg.oletters.size(); ++o)
    ostate[o] = a.add_state(dg.oletters[o], Owner::Controller);
  a.initial = s0;
  for (std::size_t i = 0; i < dg.iletters.size(); ++i) {
    a.next[s0][i] = istate[i];
    for (std::size_t o = 0; o < dg.oletters.size(); ++o)
      a.next[ostate[o]][i] = istate[i];
  }
  for (std::size_t i = 0; i < dg.iletters.size(); ++i)
    for (std::size_t o = 0; o < dg.oletters.size(); ++o)
      a.next[istate[i]][o] = ostate[o];

  // Controller (playing Player I's letters) wants the pair word to fall
  // outside the delay game's condition.
  OmegaAutomaton c = complement_of(dg.condition);
  OmegaAutomaton cond;
  cond.kind = c.kind;
  cond.letters = a.state_names;
  int nq = c.num_states();
  int ni = static_cast<int>(dg.iletters.size());
  // States: (q, -1) between pairs, (q, a) holding a pending input letter.
  auto pack = [&](int q, int pending) { return q * (ni + 1) + pending + 1; };
  for (int q = 0; q < nq; ++q)
    for (int p = -1; p < ni; ++p) {
      int id = cond.add_state(c.state_names[q] +
                              (p < 0 ? "" : "+" + dg.iletters[p]));
      if (c.kind == AcceptanceKind::Parity)
        cond.color[id] = c.color[q];
      else
        cond.marked[id] = c.marked[q];
    }
  for (int q = 0; q < nq; ++q)
    for (int p = -1; p < ni; ++p) {
      int from = pack(q, p);
      // Reading the start state never happens after the first move.
      cond.next[from][0] = from;
      for (int i = 0; i < ni; ++i)
        cond.next[from][1 + i] = p < 0 ? pack(q, i) : from;
      for (std::size_t o = 0; o < dg.oletters.size(); ++o) {
        int l = 1 + ni + static_cast<int>(o);
        if (p < 0) {
          cond.next[from][l] = from;
        } else {
          int pl = c.letter_index(
              pair_letter(dg.iletters[p], dg.oletters[o]));
          cond.next[from][l] = pack(c.next[q][pl], -1);
        }
      }
    }
  cond.initial = pack(c.initial, -1);

  out.game.arena = std::move(a);
  out.game.condition = std::move(cond);
  out.receipt.output_condition_states = out.game.condition.num_states();
  out.receipt.output_arena_states = out.game.arena.num_states();
  return out;
}

namespace {

std::vector<std::string> apply_renaming(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& table,
    bool forward) {
  for (auto& l : letters)
    for (const auto& [from, to] : table)
      if (l == (forward ? from : to)) {
        l = forward ? to : from;
        break;
      }
  return letters;
}

}  // namespace

StrategyMachine lift_controller_to_I(const StrategyMachine& s, int delta,
                                     const TransformReceipt& receipt) {
  if (s.side != StrategyMachine::Side::Emitter)
    throw usage_error("controller machine must be an emitter");
  if (s.block_length() != delta / 2 + 1)
    throw usage_error("initial block does not match the delay");
  StrategyMachine r = s;
  // Environment letters may have been primed on the way to the delay
  // game; the controller's own letters are shared verbatim.
  r.in_letters = apply_renaming(r.in_letters, receipt.renaming, true);
  return r;
}

StrategyMachine lift_I_to_controller(const StrategyMachine& s, int lookahead,
                                     const TransformReceipt& receipt) {
  if (s.side != StrategyMachine::Side::Emitter)
    throw usage_error("Player I machine must be an emitter");
  if (s.block_length() != lookahead + 1)
    throw usage_error("initial block does not match the lookahead");
  StrategyMachine r = s;
  r.in_letters = apply_renaming(r.in_letters, receipt.renaming, false);
  return r;
}

StrategyMachine lift_env_to_O(const StrategyMachine& s, int k,
                              const TransformReceipt& receipt) {
  if (s.side != StrategyMachine::Side::Responder || s.lead_in != 0)
    throw usage_error("environment machine must be a lead-in-free responder");
  if (k < 0) throw usage_error("lookahead must be nonnegative");
  StrategyMachine r;
  r.side = StrategyMachine::Side::Responder;
  r.lead_in = k;
  r.in_letters = s.in_letters;
  r.out_letters = apply_renaming(s.out_letters, receipt.renaming, true);

  // Memory: inner memory plus the FIFO of inputs not yet shown to the
  // inner machine.
  using Key = std::pair<int, std::vector<int>>;
  std::map<Key, int> index;
  std::deque<Key> work;
  r.memory_names.clear();
  auto intern = [&](const Key& key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::string name = s.memory_names[key.first];
    for (int l : key.second) name += "+" + s.in_letters[l];
    int id = static_cast<int>(r.memory_names.size());
    r.memory_names.push_back(name);
    index[key] = id;
    work.push_back(key);
    return id;
  };
  int ni = static_cast<int>(s.in_letters.size());
  r.memory_init = intern({s.memory_init, {}});
  while (!work.empty()) {
    Key key = work.front();
    work.pop_front();
    int from = index[key];
    if (static_cast<int>(key.second.size()) < k) {
      for (int in = 0; in < ni; ++in) {
        auto buf = key.second;
        buf.push_back(in);
        int to = intern({key.first, buf});
        r.update[{from, in, StrategyMachine::kEps}] = to;
      }
      continue;
    }
    for (int in = 0; in < ni; ++in) {
      auto buf = key.second;
      buf.push_back(in);
      int delayed = buf.front();
      buf.erase(buf.begin());
      r.output[{from, in}] = s.out_dist(key.first, delayed);
      for (const auto& [out, p] : r.output[{from, in}]) {
        int im = s.next_mem(key.first, delayed, out);
        int to = intern({im, buf});
        if (to != from) r.update[{from, in, out}] = to;
      }
    }
  }
  return r;
}

}  // namespace delcon
