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

#include "delcon/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "delcon/matrix_game.hpp"
#include "delcon/solve_delay.hpp"

namespace delcon {

namespace {

// Arena-and-condition pair space with the condition saturated, so that
// decided positions (all continuations win / all lose) stay decided
// along every play.
struct PairSpace {
  const Arena* arena = nullptr;
  OmegaAutomaton cond;
  int nq = 0;
  AcceptanceKind kind = AcceptanceKind::Safety;
  std::vector<std::vector<int>> letter_of_state;  // cond letter per arena state
  std::vector<char> win_all, lose_all;

  int pid(int s, int q) const { return s * nq + q; }
  std::pair<int, int> step(int s, int q, int l) const {
    int s2 = arena->next[s][l];
    int q2 = cond.next[q][letter_of_state[0][s2]];
    return {s2, q2};
  }
  bool decided(int s, int q) const {
    return win_all[pid(s, q)] || lose_all[pid(s, q)];
  }
  Rat leaf(int s, int q) const {
    if (win_all[pid(s, q)]) return 1;
    if (lose_all[pid(s, q)]) return 0;
    // Truncation: unviolated safety counts as a win, unreached target
    // as a loss.
    return kind == AcceptanceKind::Safety ? 1 : 0;
  }
};

PairSpace make_space(const DelayedControlGame& g) {
  auto errs = validate(g);
  if (!errs.empty()) throw validation_error(errs.front());
  if (g.condition.kind == AcceptanceKind::Parity)
    throw usage_error("parity conditions have no sound truncation");
  PairSpace sp;
  sp.arena = &g.arena;
  sp.cond = saturated(g.condition);
  sp.nq = sp.cond.num_states();
  sp.kind = sp.cond.kind;
  sp.letter_of_state.assign(1, std::vector<int>(g.arena.num_states()));
  for (int s = 0; s < g.arena.num_states(); ++s)
    sp.letter_of_state[0][s] = sp.cond.letter_index(g.arena.state_names[s]);

  int n = g.arena.num_states() * sp.nq;
  std::vector<std::vector<int>> succ(n);
  std::vector<char> marked(n, 0);
  for (int s = 0; s < g.arena.num_states(); ++s)
    for (int q = 0; q < sp.nq; ++q) {
      int p = sp.pid(s, q);
      marked[p] = sp.cond.marked[q];
      int nl = static_cast<int>(g.arena.alphabet_of(s).size());
      for (int l = 0; l < nl; ++l) {
        auto [s2, q2] = sp.step(s, q, l);
        succ[p].push_back(sp.pid(s2, q2));
      }
    }
  // Positions from which some play still reaches a marked pair.
  std::vector<char> can_reach = marked;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      if (can_reach[p]) continue;
      for (int w : succ[p])
        if (can_reach[w]) {
          can_reach[p] = 1;
          changed = true;
          break;
        }
    }
  }
  // Positions from which every play hits a marked pair.
  std::vector<char> all_hit = marked;
  changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      if (all_hit[p]) continue;
      bool all = true;
      for (int w : succ[p])
        if (!all_hit[w]) {
          all = false;
          break;
        }
      if (all) {
        all_hit[p] = 1;
        changed = true;
      }
    }
  }
  if (sp.kind == AcceptanceKind::Safety) {
    sp.win_all.assign(n, 0);
    for (int p = 0; p < n; ++p) sp.win_all[p] = !can_reach[p];
    sp.lose_all = all_hit;
  } else {
    sp.win_all = all_hit;
    sp.lose_all.assign(n, 0);
    for (int p = 0; p < n; ++p) sp.lose_all[p] = !can_reach[p];
  }
  return sp;
}

void check_horizon(const HorizonPolicy& hp) {
  if (hp.horizon < 1) throw usage_error("horizon must be at least 1");
}

void check_delta(int delta) {
  if (delta < 0 || delta % 2 != 0) throw usage_error("delay must be even");
}

ValueReport::Kind truncated_kind(const PairSpace& sp, bool absorbing) {
  if (absorbing) return ValueReport::Kind::Exact;
  return sp.kind == AcceptanceKind::Safety ? ValueReport::Kind::UpperBound
                                           : ValueReport::Kind::LowerBound;
}

void require_absorbing(const DelayedControlGame& g, int delta,
                       const HorizonPolicy& hp) {
  if (!hp.absorbing) return;
  if (!is_absorbing_within(g, delta, hp.horizon))
    throw usage_error("game is not absorbing within the horizon");
}

}  // namespace

bool is_absorbing_within(const DelayedControlGame& g, int delta, int horizon) {
  check_delta(delta);
  if (horizon < 1) throw usage_error("horizon must be at least 1");
  PairSpace sp = make_space(g);
  std::vector<char> layer(g.arena.num_states() * sp.nq, 0);
  layer[sp.pid(g.arena.initial, sp.cond.initial)] = 1;
  int steps = 2 * horizon + 1;
  for (int d = 0; d < steps; ++d) {
    std::vector<char> next(layer.size(), 0);
    for (int s = 0; s < g.arena.num_states(); ++s)
      for (int q = 0; q < sp.nq; ++q) {
        if (!layer[sp.pid(s, q)] || sp.decided(s, q)) continue;
        int nl = static_cast<int>(g.arena.alphabet_of(s).size());
        for (int l = 0; l < nl; ++l) {
          auto [s2, q2] = sp.step(s, q, l);
          next[sp.pid(s2, q2)] = 1;
        }
      }
    layer = std::move(next);
  }
  for (int s = 0; s < g.arena.num_states(); ++s)
    for (int q = 0; q < sp.nq; ++q)
      if (layer[sp.pid(s, q)] && !sp.decided(s, q)) return false;
  return true;
}

namespace {

// ---- evaluate_guaranteed ------------------------------------------------

// Posterior over the controller machine's hidden side: memory state and
// the letters committed but not yet played.
struct CtrlAtom {
  int mem;
  std::vector<int> buf;
  Rat w;
};

struct GuaranteedCtx {
  const DelayedControlGame* g;
  const PairSpace* sp;
  const StrategyMachine* m;
  int total_letters;
  std::map<std::string, Rat> memo;
};

std::string posterior_key(int s, int q, int lp,
                          const std::vector<CtrlAtom>& post) {
  std::ostringstream os;
  os << s << ';' << q << ';' << lp;
  for (const auto& a : post) {
    os << '|' << a.mem << ':';
    for (int l : a.buf) os << l << ',';
    os << rat_str(a.w);
  }
  return os.str();
}

Rat eval_guaranteed(GuaranteedCtx& ctx, int s, int q, int lp,
                    std::vector<CtrlAtom> post) {
  const PairSpace& sp = *ctx.sp;
  if (sp.decided(s, q)) return sp.leaf(s, q);
  if (lp == ctx.total_letters) return sp.leaf(s, q);
  std::sort(post.begin(), post.end(), [](const CtrlAtom& a, const CtrlAtom& b) {
    return std::tie(a.mem, a.buf) < std::tie(b.mem, b.buf);
  });
  std::string key = posterior_key(s, q, lp, post);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  Rat val = 0;
  if (lp % 2 == 0) {
    // Controller's turn: the committed letter at the buffer front is
    // played; the environment observes it, splitting the posterior.
    std::map<int, std::vector<CtrlAtom>> by_front;
    std::map<int, Rat> mass;
    for (auto& a : post) {
      int front = a.buf.front();
      CtrlAtom rest{a.mem, {a.buf.begin() + 1, a.buf.end()}, a.w};
      mass[front] += a.w;
      by_front[front].push_back(std::move(rest));
    }
    for (auto& [ca, atoms] : by_front) {
      for (auto& a : atoms) a.w /= mass[ca];
      auto [s2, q2] = sp.step(s, q, ca);
      val += mass[ca] * eval_guaranteed(ctx, s2, q2, lp + 1, std::move(atoms));
    }
  } else {
    // Environment's turn: pure minimization per visible history.
    bool first = true;
    int nl = static_cast<int>(ctx.g->arena.eletters.size());
    for (int eb = 0; eb < nl; ++eb) {
      auto [s2, q2] = sp.step(s, q, eb);
      std::vector<CtrlAtom> next;
      for (const auto& a : post)
        for (const auto& [out, p] : ctx.m->out_dist(a.mem, eb)) {
          CtrlAtom na{ctx.m->next_mem(a.mem, eb, out), a.buf, a.w * p};
          na.buf.push_back(out);
          next.push_back(std::move(na));
        }
      Rat v = eval_guaranteed(ctx, s2, q2, lp + 1, std::move(next));
      if (first || v < val) {
        val = v;
        first = false;
      }
    }
  }
  ctx.memo[key] = val;
  return val;
}

int mem_after_block_letters(const StrategyMachine& m,
                            const std::vector<int>& block) {
  int mem = m.memory_init;
  for (int l : block) mem = step_block(m, mem, l);
  return mem;
}

void check_controller_machine(const DelayedControlGame& g, int delta,
                              const StrategyMachine& m) {
  if (m.side != StrategyMachine::Side::Emitter)
    throw usage_error("controller machine must be an emitter");
  if (m.in_letters != g.arena.eletters || m.out_letters != g.arena.cletters)
    throw usage_error("machine alphabets do not match the game");
  if (m.block_length() != delta / 2 + 1)
    throw usage_error("initial block does not match the delay");
  auto errs = validate(m);
  if (!errs.empty()) throw validation_error(errs.front());
}

void check_environment_machine(const DelayedControlGame& g,
                               const StrategyMachine& m) {
  if (m.side != StrategyMachine::Side::Responder || m.lead_in != 0)
    throw usage_error("environment machine must be a lead-in-free responder");
  if (m.in_letters != g.arena.cletters || m.out_letters != g.arena.eletters)
    throw usage_error("machine alphabets do not match the game");
  auto errs = validate(m);
  if (!errs.empty()) throw validation_error(errs.front());
}

}  // namespace

ValueReport evaluate_guaranteed(const DelayedControlGame& g, int delta,
                                const StrategyMachine& controller,
                                const HorizonPolicy& hp) {
  check_delta(delta);
  check_horizon(hp);
  check_controller_machine(g, delta, controller);
  require_absorbing(g, delta, hp);
  PairSpace sp = make_space(g);
  GuaranteedCtx ctx{&g, &sp, &controller, 2 * hp.horizon + 1, {}};
  std::vector<CtrlAtom> post;
  for (const auto& [block, p] : controller.init_blocks)
    post.push_back({mem_after_block_letters(controller, block), block, p});
  Rat v = eval_guaranteed(ctx, g.arena.initial, sp.cond.initial, 0,
                          std::move(post));
  ValueReport r = ValueReport::exact(v);
  r.kind = truncated_kind(sp, hp.absorbing);
  if (r.kind == ValueReport::Kind::LowerBound) r.hi = 1;
  if (r.kind == ValueReport::Kind::UpperBound) r.lo = 0;
  r.horizon_used = hp.horizon;
  return r;
}

namespace {

// ---- best_response_controller -------------------------------------------

// Posterior over everything the controller cannot see: game position,
// environment memory, and environment letters played but not yet
// observable under the delay.
struct BrAtom {
  int s, q, mem;
  std::vector<int> pending;
  Rat w;
};

struct BrCtx {
  const DelayedControlGame* g;
  const PairSpace* sp;
  const StrategyMachine* env;
  int horizon;
  int delta;
  std::map<std::string, Rat> memo;
};

std::string br_key(int n, const std::vector<BrAtom>& post) {
  std::ostringstream os;
  os << n;
  for (const auto& a : post) {
    os << '|' << a.s << ',' << a.q << ',' << a.mem << ':';
    for (int l : a.pending) os << l << ',';
    os << rat_str(a.w);
  }
  return os.str();
}

// Value of the optimally playing controller over the undecided part of
// the posterior; decided atoms are settled by the callers.
Rat best_response(BrCtx& ctx, int n, std::vector<BrAtom> post) {
  const PairSpace& sp = *ctx.sp;
  if (post.empty()) return 0;
  if (n > ctx.horizon) {
    Rat v = 0;
    // Optimistic truncation keeps the result an upper bound.
    for (const auto& a : post)
      v += a.w * (sp.lose_all[sp.pid(a.s, a.q)] ? Rat(0) : Rat(1));
    return v;
  }
  std::sort(post.begin(), post.end(), [](const BrAtom& a, const BrAtom& b) {
    return std::tie(a.s, a.q, a.mem, a.pending) <
           std::tie(b.s, b.q, b.mem, b.pending);
  });
  std::string key = br_key(n, post);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  Rat best;
  bool first = true;
  int ncl = static_cast<int>(ctx.g->arena.cletters.size());
  for (int ca = 0; ca < ncl; ++ca) {
    std::vector<BrAtom> next;
    Rat settled = 0;
    for (const auto& a : post) {
      auto [s1, q1] = sp.step(a.s, a.q, ca);
      if (n == ctx.horizon) {
        BrAtom na{s1, q1, a.mem, a.pending, a.w};
        next.push_back(std::move(na));
        continue;
      }
      for (const auto& [eb, p] : ctx.env->out_dist(a.mem, ca)) {
        auto [s2, q2] = sp.step(s1, q1, eb);
        BrAtom na{s2, q2, ctx.env->next_mem(a.mem, ca, eb), a.pending,
                  a.w * p};
        na.pending.push_back(eb);
        if (sp.decided(s2, q2)) {
          if (sp.win_all[sp.pid(s2, q2)]) settled += na.w;
        } else {
          next.push_back(std::move(na));
        }
      }
    }
    Rat v = settled;
    if (!next.empty()) {
      if (n + 1 > ctx.delta / 2) {
        // The next decision observes the oldest pending letter.
        std::map<int, std::vector<BrAtom>> by_front;
        for (auto& a : next) {
          int front = a.pending.front();
          a.pending.erase(a.pending.begin());
          by_front[front].push_back(std::move(a));
        }
        for (auto& [o, atoms] : by_front)
          v += best_response(ctx, n + 1, std::move(atoms));
      } else {
        v += best_response(ctx, n + 1, std::move(next));
      }
    }
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  ctx.memo[key] = best;
  return best;
}

}  // namespace

ValueReport best_response_controller(const DelayedControlGame& g, int delta,
                                     const StrategyMachine& environment,
                                     const HorizonPolicy& hp) {
  check_delta(delta);
  check_horizon(hp);
  check_environment_machine(g, environment);
  require_absorbing(g, delta, hp);
  PairSpace sp = make_space(g);
  BrCtx ctx{&g, &sp, &environment, hp.horizon, delta, {}};
  std::vector<BrAtom> post;
  Rat settled = 0;
  int s0 = g.arena.initial;
  int q0 = sp.cond.initial;
  if (sp.decided(s0, q0))
    settled = sp.win_all[sp.pid(s0, q0)] ? 1 : 0;
  else
    post.push_back({s0, q0, environment.memory_init, {}, Rat(1)});
  Rat v = settled + best_response(ctx, 0, std::move(post));
  ValueReport r = ValueReport::exact(v);
  r.kind = hp.absorbing ? ValueReport::Kind::Exact
                        : ValueReport::Kind::UpperBound;
  if (r.kind == ValueReport::Kind::UpperBound) r.lo = 0;
  r.horizon_used = hp.horizon;
  return r;
}

namespace {

// ---- normal_form_value ---------------------------------------------------

// Both players are subject to the same delay window: the n-th letter
// may depend on the play prefix lagging delta behind. A pure strategy
// therefore maps (decision index, opponent letters inside the window)
// to a letter; own past letters are implied by the strategy itself.
// Unlisted keys mean "letter 0" and only occur on branches where the
// outcome is settled.
using CtrlStrategy = std::map<std::pair<int, std::vector<int>>, int>;
using EnvStrategy = std::map<std::pair<int, std::vector<int>>, int>;

struct EnumCtx {
  const DelayedControlGame* g;
  const PairSpace* sp;
  int horizon;
  int delta;
  std::size_t cap;
};

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw budget_error(
        "pure strategy count exceeds the cap; use the sandwich bounds");
}

struct CtrlConfig {
  int s, q;
  std::vector<int> pending;
};

std::vector<CtrlStrategy> enum_ctrl(const EnumCtx& ctx, int n,
                                    const std::vector<int>& obs,
                                    std::vector<CtrlConfig> configs) {
  const PairSpace& sp = *ctx.sp;
  std::erase_if(configs,
                [&](const CtrlConfig& c) { return sp.decided(c.s, c.q); });
  if (configs.empty() || n > ctx.horizon) return {CtrlStrategy{}};

  std::vector<CtrlStrategy> result;
  int ncl = static_cast<int>(ctx.g->arena.cletters.size());
  int nel = static_cast<int>(ctx.g->arena.eletters.size());
  for (int ca = 0; ca < ncl; ++ca) {
    std::vector<CtrlConfig> next;
    for (const auto& c : configs) {
      auto [s1, q1] = sp.step(c.s, c.q, ca);
      if (n == ctx.horizon) {
        next.push_back({s1, q1, c.pending});
        continue;
      }
      for (int eb = 0; eb < nel; ++eb) {
        auto [s2, q2] = sp.step(s1, q1, eb);
        CtrlConfig nc{s2, q2, c.pending};
        nc.pending.push_back(eb);
        next.push_back(std::move(nc));
      }
    }
    std::vector<CtrlStrategy> subs;
    if (n + 1 > ctx.delta / 2 && n < ctx.horizon) {
      std::map<int, std::vector<CtrlConfig>> by_front;
      for (auto& c : next) {
        int front = c.pending.front();
        c.pending.erase(c.pending.begin());
        by_front[front].push_back(std::move(c));
      }
      subs = {CtrlStrategy{}};
      for (auto& [o, cs] : by_front) {
        auto obs2 = obs;
        obs2.push_back(o);
        auto branch = enum_ctrl(ctx, n + 1, obs2, std::move(cs));
        std::vector<CtrlStrategy> merged;
        check_cap(subs.size() * branch.size(), ctx.cap);
        for (const auto& base : subs)
          for (const auto& ext : branch) {
            CtrlStrategy m = base;
            m.insert(ext.begin(), ext.end());
            merged.push_back(std::move(m));
          }
        subs = std::move(merged);
      }
    } else {
      subs = enum_ctrl(ctx, n + 1, obs, std::move(next));
    }
    check_cap(result.size() + subs.size(), ctx.cap);
    for (auto& sub : subs) {
      sub[{n, obs}] = ca;
      result.push_back(std::move(sub));
    }
  }
  return result;
}

struct EnvConfig {
  int s, q;
  std::vector<int> pending;  // controller letters still outside the window
};

std::vector<EnvStrategy> enum_env(const EnumCtx& ctx, int n,
                                  const std::vector<int>& obs,
                                  std::vector<EnvConfig> configs);

// Position after controller letter a_n: the environment observes the
// letter leaving its window, if any, then makes its n-th decision. Its
// n-th letter sees a_0..a_{n - delta/2} only.
std::vector<EnvStrategy> env_observe(const EnumCtx& ctx, int n,
                                     const std::vector<int>& obs,
                                     std::vector<EnvConfig> configs) {
  const PairSpace& sp = *ctx.sp;
  std::erase_if(configs,
                [&](const EnvConfig& c) { return sp.decided(c.s, c.q); });
  if (configs.empty() || n >= ctx.horizon) return {EnvStrategy{}};
  if (n < ctx.delta / 2) return enum_env(ctx, n, obs, std::move(configs));
  std::map<int, std::vector<EnvConfig>> by_front;
  for (auto& c : configs) {
    int front = c.pending.front();
    c.pending.erase(c.pending.begin());
    by_front[front].push_back(std::move(c));
  }
  std::vector<EnvStrategy> subs{EnvStrategy{}};
  for (auto& [o, cs] : by_front) {
    auto obs2 = obs;
    obs2.push_back(o);
    auto branch = enum_env(ctx, n, obs2, std::move(cs));
    std::vector<EnvStrategy> merged;
    check_cap(subs.size() * branch.size(), ctx.cap);
    for (const auto& base : subs)
      for (const auto& ext : branch) {
        EnvStrategy m = base;
        m.insert(ext.begin(), ext.end());
        merged.push_back(std::move(m));
      }
    subs = std::move(merged);
  }
  return subs;
}

std::vector<EnvStrategy> enum_env(const EnumCtx& ctx, int n,
                                  const std::vector<int>& obs,
                                  std::vector<EnvConfig> configs) {
  const PairSpace& sp = *ctx.sp;
  std::vector<EnvStrategy> result;
  int ncl = static_cast<int>(ctx.g->arena.cletters.size());
  int nel = static_cast<int>(ctx.g->arena.eletters.size());
  for (int eb = 0; eb < nel; ++eb) {
    std::vector<EnvConfig> next;
    for (const auto& c : configs) {
      auto [s1, q1] = sp.step(c.s, c.q, eb);
      for (int ca = 0; ca < ncl; ++ca) {
        auto [s2, q2] = sp.step(s1, q1, ca);
        EnvConfig nc{s2, q2, c.pending};
        nc.pending.push_back(ca);
        next.push_back(std::move(nc));
      }
    }
    auto subs = env_observe(ctx, n + 1, obs, std::move(next));
    check_cap(result.size() + subs.size(), ctx.cap);
    for (auto& sub : subs) {
      sub[{n, obs}] = eb;
      result.push_back(std::move(sub));
    }
  }
  return result;
}

Rat playback(const EnumCtx& ctx, const CtrlStrategy& cs,
             const EnvStrategy& es) {
  const PairSpace& sp = *ctx.sp;
  int s = ctx.g->arena.initial;
  int q = sp.cond.initial;
  std::deque<int> cpending, epending;
  std::vector<int> cobs, eobs;
  for (int n = 0; n <= ctx.horizon; ++n) {
    if (n > ctx.delta / 2 && !cpending.empty()) {
      cobs.push_back(cpending.front());
      cpending.pop_front();
    }
    auto ci = cs.find({n, cobs});
    int ca = ci == cs.end() ? 0 : ci->second;
    std::tie(s, q) = sp.step(s, q, ca);
    if (n == ctx.horizon) break;
    epending.push_back(ca);
    if (n >= ctx.delta / 2) {
      eobs.push_back(epending.front());
      epending.pop_front();
    }
    auto ei = es.find({n, eobs});
    int eb = ei == es.end() ? 0 : ei->second;
    std::tie(s, q) = sp.step(s, q, eb);
    cpending.push_back(eb);
  }
  return sp.win_all[sp.pid(s, q)] ? 1 : 0;
}

}  // namespace

ValueReport normal_form_value(const DelayedControlGame& g, int delta,
                              const HorizonPolicy& hp,
                              const NormalFormOptions& opts) {
  check_delta(delta);
  check_horizon(hp);
  PairSpace sp = make_space(g);
  if (!is_absorbing_within(g, delta, hp.horizon))
    throw usage_error("game is not absorbing within the horizon");
  EnumCtx ctx{&g, &sp, hp.horizon, delta, opts.strategy_cap};

  auto ctrl = enum_ctrl(ctx, 0, {}, {{g.arena.initial, sp.cond.initial, {}}});
  std::vector<EnvStrategy> env;
  {
    std::vector<EnvConfig> init;
    int ncl = static_cast<int>(g.arena.cletters.size());
    for (int ca = 0; ca < ncl; ++ca) {
      auto [s1, q1] = sp.step(g.arena.initial, sp.cond.initial, ca);
      init.push_back({s1, q1, {ca}});
    }
    env = env_observe(ctx, 0, {}, std::move(init));
  }

  // Payoff matrix with duplicate rows and columns removed.
  std::vector<std::vector<Rat>> rows;
  std::map<std::string, int> row_seen;
  std::vector<int> row_rep;
  for (std::size_t i = 0; i < ctrl.size(); ++i) {
    std::vector<Rat> row;
    std::ostringstream sig;
    for (const auto& es : env) {
      row.push_back(playback(ctx, ctrl[i], es));
      sig << rat_str(row.back()) << ';';
    }
    if (row_seen.emplace(sig.str(), static_cast<int>(rows.size())).second) {
      rows.push_back(std::move(row));
      row_rep.push_back(static_cast<int>(i));
    }
  }
  std::vector<std::vector<Rat>> matrix;
  std::map<std::string, int> col_seen;
  std::vector<int> col_rep;
  matrix.assign(rows.size(), {});
  for (std::size_t j = 0; j < env.size(); ++j) {
    std::ostringstream sig;
    for (const auto& row : rows) sig << rat_str(row[j]) << ';';
    if (col_seen.emplace(sig.str(), static_cast<int>(col_rep.size())).second) {
      col_rep.push_back(static_cast<int>(j));
      for (std::size_t i = 0; i < rows.size(); ++i)
        matrix[i].push_back(rows[i][j]);
    }
  }

  MatrixSolution sol = solve_matrix_exact(matrix);
  ValueReport r = ValueReport::exact(sol.value);
  r.horizon_used = hp.horizon;
  for (std::size_t i = 0; i < sol.row.size(); ++i)
    if (sol.row[i] != 0)
      r.row_profile.emplace_back("C#" + std::to_string(row_rep[i]), sol.row[i]);
  for (std::size_t j = 0; j < sol.col.size(); ++j)
    if (sol.col[j] != 0)
      r.col_profile.emplace_back("E#" + std::to_string(col_rep[j]), sol.col[j]);
  return r;
}

namespace {

// ---- simulate ------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Exact sampling of a rational distribution: draw uniformly below the
// common denominator by masked rejection.
template <typename Dist>
int draw(std::mt19937_64& rng, const Dist& dist) {
  BigInt denom = 1;
  for (const auto& [v, p] : dist)
    denom = boost::multiprecision::lcm(denom, denominator(p));
  std::uint64_t d = static_cast<std::uint64_t>(denom);
  std::uint64_t mask = ~0ull;
  while ((mask >> 1) >= d - 1 && mask > 1) mask >>= 1;
  std::uint64_t x;
  do {
    x = rng() & mask;
  } while (x >= d);
  BigInt acc = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += static_cast<BigInt>(numerator(dist[i].second) * denom /
                               denominator(dist[i].second));
    if (BigInt(x) < acc) return static_cast<int>(i);
  }
  return static_cast<int>(dist.size()) - 1;
}

}  // namespace

ValueReport simulate(const DelayedControlGame& g, int delta,
                     const StrategyMachine& controller,
                     const StrategyMachine& environment,
                     const HorizonPolicy& hp, std::uint64_t trials,
                     std::uint64_t seed) {
  check_delta(delta);
  check_horizon(hp);
  check_controller_machine(g, delta, controller);
  check_environment_machine(g, environment);
  if (trials == 0) throw usage_error("at least one trial is required");
  PairSpace sp = make_space(g);

  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
    int bi = draw(rng, controller.init_blocks);
    const auto& block = controller.init_blocks[bi].first;
    int cmem = mem_after_block_letters(controller, block);
    int emem = environment.memory_init;
    std::deque<int> buf(block.begin(), block.end());
    int s = g.arena.initial;
    int q = sp.cond.initial;
    for (int n = 0; n <= hp.horizon; ++n) {
      int ca = buf.front();
      buf.pop_front();
      std::tie(s, q) = sp.step(s, q, ca);
      if (sp.decided(s, q) || n == hp.horizon) break;
      const auto& edist = environment.out_dist(emem, ca);
      int eb = edist[draw(rng, edist)].first;
      emem = environment.next_mem(emem, ca, eb);
      std::tie(s, q) = sp.step(s, q, eb);
      if (sp.decided(s, q)) break;
      const auto& cdist = controller.out_dist(cmem, eb);
      int na = cdist[draw(rng, cdist)].first;
      cmem = controller.next_mem(cmem, eb, na);
      buf.push_back(na);
    }
    Rat leaf = sp.leaf(s, q);
    if (leaf == 1) ++wins;
  }

  ValueReport r;
  r.kind = ValueReport::Kind::Estimate;
  r.estimate = Rat(BigInt(wins), BigInt(trials));
  r.sample_count = trials;
  r.seed = seed;
  r.horizon_used = hp.horizon;
  double p = static_cast<double>(wins) / static_cast<double>(trials);
  double half = 2.5758 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
  auto to_rat = [](double x) {
    double c = std::clamp(x, 0.0, 1.0);
    return Rat(BigInt(static_cast<long long>(std::llround(c * 1e9))),
               BigInt(1'000'000'000));
  };
  r.lo = to_rat(p - half);
  r.hi = to_rat(p + half);
  return r;
}

std::vector<std::pair<int, Rat>> value_profile(
    const DelayedControlGame& g, int delta, const StrategyMachine& controller,
    const std::vector<int>& horizons) {
  if (g.condition.kind != AcceptanceKind::Reachability)
    throw usage_error("value profiles need a reachability condition");
  std::vector<std::pair<int, Rat>> out;
  for (int t : horizons) {
    HorizonPolicy hp{t, false};
    out.emplace_back(t, evaluate_guaranteed(g, delta, controller, hp).lo);
  }
  return out;
}

RandomizedClassification classify_randomized(const DelayedControlGame& g,
                                             int delta,
                                             const HorizonPolicy& hp,
                                             const NormalFormOptions& opts) {
  check_delta(delta);
  check_horizon(hp);
  RandomizedClassification out;
  PureVerdict pure = classify_pure(g, delta);
  if (pure == PureVerdict::ControllerSure) {
    out.kind = RandomizedClassification::Kind::ControllerSure;
    out.value = 1;
    out.env_value = 0;
    return out;
  }
  if (pure == PureVerdict::EnvSure) {
    out.kind = RandomizedClassification::Kind::EnvSure;
    out.value = 0;
    out.env_value = 1;
    return out;
  }
  if (g.condition.kind != AcceptanceKind::Parity &&
      is_absorbing_within(g, delta, hp.horizon)) {
    HorizonPolicy exact{hp.horizon, true};
    ValueReport v = normal_form_value(g, delta, exact, opts);
    out.kind = RandomizedClassification::Kind::Value;
    out.value = v.value();
    out.env_value = 1 - v.value();
    return out;
  }
  if (g.condition.kind == AcceptanceKind::Parity) {
    out.kind = RandomizedClassification::Kind::UndeterminedPure;
    return out;
  }
  HorizonPolicy loose{hp.horizon, false};
  StrategyMachine uc = uniform_controller_machine(g, delta);
  StrategyMachine ue = uniform_environment_machine(g);
  out.kind = RandomizedClassification::Kind::Bounds;
  out.lo = evaluate_guaranteed(g, delta, uc, loose).lo;
  out.hi = best_response_controller(g, delta, ue, loose).hi;
  out.controller_evidence = std::move(uc);
  out.environment_evidence = std::move(ue);
  return out;
}

std::string to_string(RandomizedClassification::Kind k) {
  switch (k) {
    case RandomizedClassification::Kind::ControllerSure:
      return "ControllerSure";
    case RandomizedClassification::Kind::EnvSure: return "EnvSure";
    case RandomizedClassification::Kind::Value: return "Value";
    case RandomizedClassification::Kind::Bounds: return "Bounds";
    case RandomizedClassification::Kind::UndeterminedPure:
      return "UndeterminedPure";
  }
  return "?";
}

}  // namespace delcon
