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

#include "delcon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "delcon/io.hpp"
#include "delcon/randomized.hpp"
#include "delcon/solve_delay.hpp"
#include "delcon/transforms.hpp"
#include "delcon/verify.hpp"

namespace delcon {

std::string to_string(ValueReport::Kind k) {
  switch (k) {
    case ValueReport::Kind::Exact: return "Exact";
    case ValueReport::Kind::LowerBound: return "LowerBound";
    case ValueReport::Kind::UpperBound: return "UpperBound";
    case ValueReport::Kind::Interval: return "Interval";
    case ValueReport::Kind::Estimate: return "Estimate";
  }
  return "?";
}

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Inputs {
  std::string digest_src;

  BuiltinGame game(const std::string& path) {
    BuiltinGame g = parse_game_file(path);
    GameText t = print_game(g, "digest");
    digest_src += t.game;
    digest_src += t.automaton;
    return g;
  }
  StrategyMachine machine(const std::string& path) {
    StrategyMachine m = parse_machine(read_file(path));
    digest_src += print_machine(m);
    return m;
  }
  void param(const std::string& s) {
    digest_src += '\x1f';
    digest_src += s;
  }
  std::string digest() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(digest_src);
    return os.str();
  }
};

DelayedControlGame as_dc(BuiltinGame g) {
  if (auto* p = std::get_if<DelayedControlGame>(&g)) return std::move(*p);
  throw usage_error("expected a delayed-control game");
}

DelayGame as_dg(BuiltinGame g) {
  if (auto* p = std::get_if<DelayGame>(&g)) return std::move(*p);
  throw usage_error("expected a delay game");
}

std::string role_name(PlayerRole r) {
  switch (r) {
    case PlayerRole::Controller: return "Controller";
    case PlayerRole::Environment: return "Environment";
    case PlayerRole::PlayerI: return "PlayerI";
    case PlayerRole::PlayerO: return "PlayerO";
  }
  return "?";
}

PlayerRole parse_role(const std::string& s) {
  if (s == "controller") return PlayerRole::Controller;
  if (s == "environment") return PlayerRole::Environment;
  if (s == "player-i") return PlayerRole::PlayerI;
  if (s == "player-o") return PlayerRole::PlayerO;
  throw usage_error(
      "player must be controller, environment, player-i, or player-o");
}

Json profile_json(const std::vector<std::pair<std::string, Rat>>& p) {
  Json arr = Json::array();
  for (const auto& [label, w] : p) arr.push_back({label, rat_str(w)});
  return arr;
}

Json report_json(const ValueReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == ValueReport::Kind::Exact) j["value"] = rat_str(r.value());
  if (r.kind != ValueReport::Kind::UpperBound) j["lo"] = rat_str(r.lo);
  if (r.kind != ValueReport::Kind::LowerBound) j["hi"] = rat_str(r.hi);
  if (r.estimate) j["estimate"] = rat_str(*r.estimate);
  if (r.horizon_used) j["horizon"] = *r.horizon_used;
  if (r.sample_count) j["samples"] = *r.sample_count;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.row_profile.empty()) j["row_profile"] = profile_json(r.row_profile);
  if (!r.col_profile.empty()) j["col_profile"] = profile_json(r.col_profile);
  return j;
}

void write_game_files(const GameText& t, const std::string& out_base) {
  std::ofstream g(out_base + ".game");
  g << t.game;
  if (!t.automaton.empty()) {
    fs::path aut = fs::path(out_base).parent_path() / t.automaton_file;
    std::ofstream a(aut.string());
    a << t.automaton;
  }
}

Json game_json(const BuiltinGame& g, const std::string& base,
               const std::string& out_base) {
  GameText t = print_game(g, base);
  if (!out_base.empty()) write_game_files(t, out_base);
  Json j;
  j["game"] = t.game;
  if (!t.automaton.empty()) {
    j["automaton_file"] = t.automaton_file;
    j["automaton"] = t.automaton;
  }
  return j;
}

int checked_delta(int delta) {
  if (delta < 0 || delta % 2 != 0) throw usage_error("delay must be even");
  return delta;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"delayed-control and delay-game toolkit"};
  app.require_subcommand(1);

  std::string game_path, strategy_path, player, direction, name, out_base;
  std::string controller_path, environment_path;
  int delta = 0, cap = 8, horizon = 3;
  int k = -1;
  std::uint64_t trials = 10000, seed = 0;
  bool exact = false, sandwich = false, randomized = false;
  std::vector<int> params;

  auto* solve_dc = app.add_subcommand("solve-dc", "solve under delayed control");
  solve_dc->add_option("game", game_path)->required();
  solve_dc->add_option("--delta", delta)->required();

  auto* solve_dg = app.add_subcommand("solve-dg", "solve a delay game");
  solve_dg->add_option("game", game_path)->required();
  solve_dg->add_option("--k", k);

  auto* solve_env = app.add_subcommand("solve-env", "solve the environment side");
  solve_env->add_option("game", game_path)->required();

  auto* transform = app.add_subcommand("transform", "convert between game kinds");
  transform->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"dc-to-dg", "dg-to-dc"}));
  transform->add_option("game", game_path)->required();
  transform->add_option("--delta", delta);
  transform->add_option("--out", out_base);

  auto* sweep_d = app.add_subcommand("sweep-delta", "sweep even delays");
  sweep_d->add_option("game", game_path)->required();
  sweep_d->add_option("--cap", cap)->required();

  auto* sweep_k_cmd = app.add_subcommand("sweep-k", "sweep lookaheads");
  sweep_k_cmd->add_option("game", game_path)->required();
  sweep_k_cmd->add_option("--cap", cap)->required();

  auto* bound = app.add_subcommand("bound", "decisive delay bound");
  bound->add_option("game", game_path)->required();

  auto* value = app.add_subcommand("value", "mixed-strategy value");
  value->add_option("game", game_path)->required();
  value->add_option("--delta", delta)->required();
  value->add_option("--horizon", horizon);
  value->add_flag("--exact", exact);
  value->add_flag("--sandwich", sandwich);

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate");
  simulate_cmd->add_option("game", game_path)->required();
  simulate_cmd->add_option("--delta", delta)->required();
  simulate_cmd->add_option("--trials", trials);
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_option("--horizon", horizon);
  simulate_cmd->add_option("--controller", controller_path);
  simulate_cmd->add_option("--environment", environment_path);

  auto* classify = app.add_subcommand("classify", "pure or randomized verdict");
  classify->add_option("game", game_path)->required();
  classify->add_option("--delta", delta)->required();
  classify->add_option("--horizon", horizon);
  classify->add_flag("--randomized", randomized);

  auto* verify = app.add_subcommand("verify", "check a strategy machine");
  verify->add_option("game", game_path)->required();
  verify->add_option("--strategy", strategy_path)->required();
  verify->add_option("--player", player)->required();
  verify->add_option("--delta", delta);

  auto* example = app.add_subcommand("example", "emit a built-in game");
  example->add_option("name", name)->required();
  example->add_option("params", params);
  example->add_option("--out", out_base);

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Json j;
  j["tool"] = "delcon";
  j["version"] = kVersion;
  j["command"] = argv;

  Inputs inputs;
  try {
    if (app.got_subcommand(solve_dc)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      inputs.param(std::to_string(checked_delta(delta)));
      DcSolveResult r = solve_delayed_control(g, delta);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "solve-dc";
      j["delta"] = delta;
      j["controller_wins"] = r.controller_wins;
      j["reduced_vertices"] = r.reduced_vertices;
      j["machine"] = r.machine ? Json(print_machine(*r.machine)) : Json();
    } else if (app.got_subcommand(solve_dg)) {
      DelayGame g = as_dg(inputs.game(game_path));
      if (k >= 0) g = with_lookahead(std::move(g), k);
      inputs.param(std::to_string(g.lookahead));
      DelaySolveResult r = solve_delay_game(g);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "solve-dg";
      j["k"] = g.lookahead;
      j["winner"] = role_name(r.winner);
      j["reduced_vertices"] = r.reduced_vertices;
      j["machine"] = r.machine ? Json(print_machine(*r.machine)) : Json();
    } else if (app.got_subcommand(solve_env)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      EnvSolveResult r = solve_environment(g);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "solve-env";
      j["environment_wins"] = r.environment_wins;
      j["machine"] = r.machine ? Json(print_machine(*r.machine)) : Json();
    } else if (app.got_subcommand(transform)) {
      BuiltinGame g = inputs.game(game_path);
      inputs.param(direction);
      j["inputs_digest"];  // placeholder keeps the key order stable
      j["operation"] = "transform";
      j["direction"] = direction;
      std::string base = out_base.empty()
                             ? "transformed"
                             : fs::path(out_base).filename().string();
      if (direction == "dc-to-dg") {
        inputs.param(std::to_string(checked_delta(delta)));
        TransformReceipt receipt;
        DelayGame dg = dc_to_delay_game(as_dc(std::move(g)), delta, &receipt);
        j["inputs_digest"] = inputs.digest();
        j["delta"] = delta;
        j["k"] = dg.lookahead;
        j.update(game_json(dg, base, out_base));
        Json ren = Json::array();
        for (const auto& [from, to] : receipt.renaming)
          ren.push_back({from, to});
        j["renaming"] = ren;
        j["condition_states"] = receipt.output_condition_states;
      } else {
        DgToDcResult r = dg_to_dc(as_dg(std::move(g)));
        j["inputs_digest"] = inputs.digest();
        j["delta"] = r.delta;
        j.update(game_json(r.game, base, out_base));
        j["arena_states"] = r.receipt.output_arena_states;
        j["condition_states"] = r.receipt.output_condition_states;
      }
    } else if (app.got_subcommand(sweep_d)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      inputs.param(std::to_string(cap));
      DeltaSweep r = sweep_delta(g, cap);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "sweep-delta";
      j["cap"] = cap;
      switch (r.verdict) {
        case DeltaSweep::Verdict::AllDelays: j["verdict"] = "AllDelays"; break;
        case DeltaSweep::Verdict::ThresholdInCap:
          j["verdict"] = "ThresholdInCap";
          break;
        case DeltaSweep::Verdict::NoneUpToCap:
          j["verdict"] = "NoneUpToCap";
          break;
      }
      j["max_winning_delta"] = r.max_winning_delta;
      Json tested = Json::array();
      for (const auto& [d, w] : r.tested) tested.push_back({d, w});
      j["tested"] = tested;
      if (r.bound) {
        j["bound"] = r.bound->delta.str();
        j["bound_quality"] = r.bound->quality == DecisiveBound::Quality::PaperExact
                                 ? "PaperExact"
                                 : "BigOHeuristic";
      }
    } else if (app.got_subcommand(sweep_k_cmd)) {
      DelayGame g = as_dg(inputs.game(game_path));
      inputs.param(std::to_string(cap));
      LookaheadSweep r = sweep_lookahead(g, cap);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "sweep-k";
      j["cap"] = cap;
      j["found"] = r.found;
      j["min_winning_k"] = r.min_winning_k;
      Json tested = Json::array();
      for (const auto& [kk, w] : r.tested) tested.push_back({kk, w});
      j["tested"] = tested;
    } else if (app.got_subcommand(bound)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      DecisiveBound b = decisive_bound(g);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "bound";
      j["delta"] = b.delta.str();
      j["quality"] = b.quality == DecisiveBound::Quality::PaperExact
                         ? "PaperExact"
                         : "BigOHeuristic";
    } else if (app.got_subcommand(value)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      inputs.param(std::to_string(checked_delta(delta)));
      inputs.param(std::to_string(horizon));
      if (exact && sandwich)
        throw usage_error("choose one of --exact and --sandwich");
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "value";
      j["delta"] = delta;
      HorizonPolicy hp{horizon, false};
      if (sandwich) {
        j["mode"] = "sandwich";
        StrategyMachine uc = uniform_controller_machine(g, delta);
        StrategyMachine ue = uniform_environment_machine(g);
        ValueReport r;
        r.kind = ValueReport::Kind::Interval;
        r.lo = evaluate_guaranteed(g, delta, uc, hp).lo;
        r.hi = best_response_controller(g, delta, ue, hp).hi;
        r.horizon_used = horizon;
        j["report"] = report_json(r);
      } else {
        j["mode"] = "exact";
        j["report"] = report_json(normal_form_value(g, delta, hp));
      }
    } else if (app.got_subcommand(simulate_cmd)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      inputs.param(std::to_string(checked_delta(delta)));
      StrategyMachine c = controller_path.empty()
                              ? uniform_controller_machine(g, delta)
                              : inputs.machine(controller_path);
      StrategyMachine e = environment_path.empty()
                              ? uniform_environment_machine(g)
                              : inputs.machine(environment_path);
      inputs.param(std::to_string(trials));
      inputs.param(std::to_string(seed));
      inputs.param(std::to_string(horizon));
      HorizonPolicy hp{horizon, false};
      ValueReport r = simulate(g, delta, c, e, hp, trials, seed);
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "simulate";
      j["delta"] = delta;
      j["report"] = report_json(r);
    } else if (app.got_subcommand(classify)) {
      DelayedControlGame g = as_dc(inputs.game(game_path));
      inputs.param(std::to_string(checked_delta(delta)));
      j["operation"] = "classify";
      j["delta"] = delta;
      if (randomized) {
        inputs.param(std::to_string(horizon));
        j["inputs_digest"] = inputs.digest();
        HorizonPolicy hp{horizon, false};
        RandomizedClassification r = classify_randomized(g, delta, hp);
        j["kind"] = to_string(r.kind);
        if (r.value) j["value"] = rat_str(*r.value);
        if (r.env_value) j["env_value"] = rat_str(*r.env_value);
        if (r.lo) j["lo"] = rat_str(*r.lo);
        if (r.hi) j["hi"] = rat_str(*r.hi);
        if (r.controller_evidence)
          j["controller_evidence"] = print_machine(*r.controller_evidence);
        if (r.environment_evidence)
          j["environment_evidence"] = print_machine(*r.environment_evidence);
      } else {
        j["inputs_digest"] = inputs.digest();
        j["verdict"] = to_string(classify_pure(g, delta));
      }
    } else if (app.got_subcommand(verify)) {
      BuiltinGame g = inputs.game(game_path);
      StrategyMachine s = inputs.machine(strategy_path);
      PlayerRole role = parse_role(player);
      inputs.param(player);
      VerifyResult r;
      if (std::holds_alternative<DelayedControlGame>(g)) {
        inputs.param(std::to_string(checked_delta(delta)));
        r = verify_strategy(std::get<DelayedControlGame>(g), delta, s, role);
      } else {
        r = verify_strategy(std::get<DelayGame>(g), s, role);
      }
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "verify";
      j["player"] = role_name(role);
      j["ok"] = r.ok;
      if (!r.ok) {
        j["stem"] = r.stem;
        j["cycle"] = r.cycle;
      }
    } else if (app.got_subcommand(example)) {
      BuiltinGame g = builtin(name, params);
      inputs.param(name);
      for (int p : params) inputs.param(std::to_string(p));
      j["inputs_digest"] = inputs.digest();
      j["operation"] = "example";
      j["name"] = name;
      std::string base =
          out_base.empty() ? name : fs::path(out_base).filename().string();
      j.update(game_json(g, base, out_base));
    }
  } catch (const usage_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    err << e.what() << "\n";
    return 4;
  }

  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace delcon
