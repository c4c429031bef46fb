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

#include "delcon/builtins.hpp"

#include <stdexcept>

namespace delcon {

namespace {

void expect_params(const std::string& name, const std::vector<int>& params,
                   std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi)
    throw usage_error("wrong parameter count for built-in " + name);
}

// Controller commits a letter twice; the environment tries to predict
// the second one. Safety: the play must avoid the predicted sink.
DelayedControlGame fig4_predict() {
  Arena a;
  a.cletters = {"h", "t"};
  a.eletters = {"h", "t"};
  int s0 = a.add_state("s0", Owner::Controller);
  int eh = a.add_state("e_h", Owner::Environment);
  int et = a.add_state("e_t", Owner::Environment);
  int ch = a.add_state("c_h", Owner::Controller);
  int ct = a.add_state("c_t", Owner::Controller);
  int bad_e = a.add_state("bad_e", Owner::Environment);
  int bad_c = a.add_state("bad_c", Owner::Controller);
  int good_e = a.add_state("good_e", Owner::Environment);
  int good_c = a.add_state("good_c", Owner::Controller);
  a.initial = s0;
  a.next[s0] = {eh, et};
  a.next[eh] = {ch, ct};
  a.next[et] = {ch, ct};
  a.next[ch] = {bad_e, good_e};   // second letter h: predicted iff guess was h
  a.next[ct] = {good_e, bad_e};
  a.next[bad_e] = {bad_c, bad_c};
  a.next[bad_c] = {bad_e, bad_e};
  a.next[good_e] = {good_c, good_c};
  a.next[good_c] = {good_e, good_e};
  StateCondition cond;
  cond.kind = AcceptanceKind::Safety;
  cond.marked_states = {"bad_e", "bad_c"};
  return make_state_condition_game(std::move(a), std::move(cond));
}

// Controller must eventually answer the environment's letter with a
// different one; no deadline.
DelayedControlGame fig6_mismatch() {
  Arena a;
  a.cletters = {"h", "t"};
  a.eletters = {"h", "t"};
  int s0 = a.add_state("s0", Owner::Controller);
  int e0 = a.add_state("e0", Owner::Environment);
  int ch = a.add_state("c_h", Owner::Controller);
  int ct = a.add_state("c_t", Owner::Controller);
  int we = a.add_state("w_e", Owner::Environment);
  int wc = a.add_state("w_c", Owner::Controller);
  a.initial = s0;
  a.next[s0] = {e0, e0};
  a.next[e0] = {ch, ct};
  a.next[ch] = {e0, we};
  a.next[ct] = {we, e0};
  a.next[we] = {wc, wc};
  a.next[wc] = {we, we};
  StateCondition cond;
  cond.kind = AcceptanceKind::Reachability;
  cond.marked_states = {"w_e", "w_c"};
  return make_state_condition_game(std::move(a), std::move(cond));
}

// Mismatch with a deadline: the controller gets rounds 1..r.
DelayedControlGame mismatch(int r) {
  if (r < 1) throw usage_error("mismatch needs r >= 1");
  Arena a;
  a.cletters = {"h", "t"};
  a.eletters = {"h", "t"};
  int s0 = a.add_state("s0", Owner::Controller);
  std::vector<int> e(r + 1), ch(r + 1), ct(r + 1);
  for (int i = 1; i <= r; ++i) {
    e[i] = a.add_state("e" + std::to_string(i), Owner::Environment);
    ch[i] = a.add_state("c" + std::to_string(i) + "_h", Owner::Controller);
    ct[i] = a.add_state("c" + std::to_string(i) + "_t", Owner::Controller);
  }
  int we = a.add_state("w_e", Owner::Environment);
  int wc = a.add_state("w_c", Owner::Controller);
  int le = a.add_state("l_e", Owner::Environment);
  int lc = a.add_state("l_c", Owner::Controller);
  a.initial = s0;
  a.next[s0] = {e[1], e[1]};
  for (int i = 1; i <= r; ++i) {
    a.next[e[i]] = {ch[i], ct[i]};
    int miss = i < r ? e[i + 1] : le;
    a.next[ch[i]] = {miss, we};
    a.next[ct[i]] = {we, miss};
  }
  a.next[we] = {wc, wc};
  a.next[wc] = {we, we};
  a.next[le] = {lc, lc};
  a.next[lc] = {le, le};
  StateCondition cond;
  cond.kind = AcceptanceKind::Reachability;
  cond.marked_states = {"w_e", "w_c"};
  return make_state_condition_game(std::move(a), std::move(cond));
}

// One-shot modular-sum game: controller picks a, environment picks b,
// controller wins iff (a + b) mod m < n.
DelayedControlGame modular(int n, int m) {
  if (m < 1 || n < 0 || n >= m) throw usage_error("modular needs 0 <= n < m");
  Arena a;
  for (int i = 0; i < m; ++i) {
    a.cletters.push_back(std::to_string(i));
    a.eletters.push_back(std::to_string(i));
  }
  int s0 = a.add_state("s0", Owner::Controller);
  std::vector<int> e(m), cw(m), cl(m);
  for (int i = 0; i < m; ++i)
    e[i] = a.add_state("e" + std::to_string(i), Owner::Environment);
  for (int i = 0; i < m; ++i) {
    cw[i] = a.add_state("cw" + std::to_string(i), Owner::Controller);
    cl[i] = a.add_state("cl" + std::to_string(i), Owner::Controller);
  }
  int we = a.add_state("w_e", Owner::Environment);
  int wc = a.add_state("w_c", Owner::Controller);
  int le = a.add_state("l_e", Owner::Environment);
  int lc = a.add_state("l_c", Owner::Controller);
  a.initial = s0;
  for (int i = 0; i < m; ++i) a.next[s0][i] = e[i];
  for (int ai = 0; ai < m; ++ai)
    for (int b = 0; b < m; ++b)
      a.next[e[ai]][b] = (ai + b) % m < n ? cw[ai] : cl[ai];
  for (int i = 0; i < m; ++i) {
    a.next[cw[i]].assign(m, we);
    a.next[cl[i]].assign(m, le);
  }
  a.next[we].assign(m, wc);
  a.next[wc].assign(m, we);
  a.next[le].assign(m, lc);
  a.next[lc].assign(m, le);
  StateCondition cond;
  cond.kind = AcceptanceKind::Reachability;
  cond.marked_states = {"w_e", "w_c"};
  return make_state_condition_game(std::move(a), std::move(cond));
}

// Player O must answer the first input letter with a letter different
// from each of the first three input letters.
DelayGame ex26(int k) {
  std::vector<std::string> il{"1", "2", "3", "4"};
  std::vector<std::string> ol{"1", "2", "3", "4"};
  OmegaAutomaton c;
  c.kind = AcceptanceKind::Safety;
  c.letters = pair_alphabet(il, {"1'", "2'", "3'", "4'"});
  int q0 = c.add_state("q0");
  std::vector<int> chk1(4), chk2(4);
  for (int b = 0; b < 4; ++b)
    chk1[b] = c.add_state("chk1_" + std::to_string(b + 1));
  for (int b = 0; b < 4; ++b)
    chk2[b] = c.add_state("chk2_" + std::to_string(b + 1));
  int acc = c.add_state("acc");
  int rej = c.add_state("rej");
  c.marked[rej] = 1;
  for (int ai = 0; ai < 4; ++ai)
    for (int b = 0; b < 4; ++b) {
      int l = ai * 4 + b;
      c.next[q0][l] = ai == b ? rej : chk1[b];
      for (int mem = 0; mem < 4; ++mem) {
        c.next[chk1[mem]][l] = ai == mem ? rej : chk2[mem];
        c.next[chk2[mem]][l] = ai == mem ? rej : acc;
      }
      c.next[acc][l] = acc;
      c.next[rej][l] = rej;
    }
  c.initial = q0;
  return make_delay_game(k, il, ol, std::move(c));
}

}  // namespace

BuiltinGame builtin(const std::string& name, const std::vector<int>& params) {
  if (name == "fig4_predict") {
    expect_params(name, params, 0, 0);
    return fig4_predict();
  }
  if (name == "fig6_mismatch") {
    expect_params(name, params, 0, 0);
    return fig6_mismatch();
  }
  if (name == "mismatch") {
    expect_params(name, params, 1, 1);
    return mismatch(params[0]);
  }
  if (name == "modular") {
    expect_params(name, params, 2, 2);
    return modular(params[0], params[1]);
  }
  if (name == "ex26") {
    expect_params(name, params, 0, 1);
    return ex26(params.empty() ? 1 : params[0]);
  }
  throw usage_error("unknown built-in game: " + name);
}

std::vector<std::string> builtin_names() {
  return {"fig4_predict", "fig6_mismatch", "mismatch", "modular", "ex26"};
}

DelayedControlGame builtin_dc(const std::string& name,
                              const std::vector<int>& params) {
  auto g = builtin(name, params);
  if (auto* dc = std::get_if<DelayedControlGame>(&g)) return *dc;
  throw usage_error(name + " is a delay game, not a delayed-control game");
}

DelayGame builtin_dg(const std::string& name, const std::vector<int>& params) {
  auto g = builtin(name, params);
  if (auto* dg = std::get_if<DelayGame>(&g)) return *dg;
  throw usage_error(name + " is a delayed-control game, not a delay game");
}

DelayGame with_lookahead(DelayGame g, int k) {
  if (k < 0) throw usage_error("lookahead must be nonnegative");
  g.lookahead = k;
  return g;
}

}  // namespace delcon
