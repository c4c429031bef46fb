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

#include "delcon/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace delcon {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw validation_error("line " + std::to_string(line) + ": " + msg);
}

void need(const Line& l, std::size_t n) {
  if (l.tokens.size() < n) fail(l.number, "too few fields for '" + l.tokens[0] + "'");
}

AcceptanceKind parse_kind_word(const Line& l, const std::string& w) {
  if (w == "safety") return AcceptanceKind::Safety;
  if (w == "reach") return AcceptanceKind::Reachability;
  if (w == "parity") return AcceptanceKind::Parity;
  fail(l.number, "unknown condition kind '" + w + "'");
}

int parse_nat(const Line& l, const std::string& w) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size() || v < 0) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    fail(l.number, "expected a natural number, got '" + w + "'");
  }
}

void check_model(const std::vector<std::string>& errs) {
  if (!errs.empty()) throw validation_error(errs.front());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

OmegaAutomaton parse_automaton(const std::string& text) {
  OmegaAutomaton a;
  bool saw_kind = false, saw_init = false;
  std::vector<std::string> colors_pending;  // (state, color) token pairs
  for (const Line& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "condition") {
      need(l, 2);
      a.kind = parse_kind_word(l, t[1]);
      saw_kind = true;
    } else if (t[0] == "alphabet") {
      need(l, 2);
      if (a.num_states() > 0) fail(l.number, "alphabet must precede states");
      a.letters.assign(t.begin() + 1, t.end());
    } else if (t[0] == "state") {
      need(l, 2);
      if (a.state_index(t[1]) >= 0) fail(l.number, "duplicate state '" + t[1] + "'");
      int q = a.add_state(t[1]);
      a.next[q].assign(a.letters.size(), -1);
      if (t.size() > 2) {
        if (t[2] != "init") fail(l.number, "unexpected '" + t[2] + "'");
        a.initial = q;
        saw_init = true;
      }
    } else if (t[0] == "trans") {
      need(l, 4);
      int q = a.state_index(t[1]);
      int li = a.letter_index(t[2]);
      int q2 = a.state_index(t[3]);
      if (q < 0) fail(l.number, "unknown state '" + t[1] + "'");
      if (li < 0) fail(l.number, "unknown letter '" + t[2] + "'");
      if (q2 < 0) fail(l.number, "unknown state '" + t[3] + "'");
      a.next[q][li] = q2;
    } else if (t[0] == "unsafe" || t[0] == "target") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        int q = a.state_index(t[i]);
        if (q < 0) fail(l.number, "unknown state '" + t[i] + "'");
        a.marked[q] = 1;
      }
    } else if (t[0] == "color") {
      need(l, 3);
      int q = a.state_index(t[1]);
      if (q < 0) fail(l.number, "unknown state '" + t[1] + "'");
      a.color[q] = parse_nat(l, t[2]);
    } else {
      fail(l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!saw_kind) throw validation_error("automaton text lacks a condition line");
  if (!saw_init && a.num_states() > 0) a.initial = 0;
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] < 0)
        throw validation_error("missing trans from '" + a.state_names[q] +
                               "' on '" + a.letters[li] + "'");
  check_model(validate(a));
  return a;
}

std::string print_automaton(const OmegaAutomaton& a) {
  std::ostringstream os;
  os << "condition " << to_string(a.kind) << "\n";
  os << "alphabet";
  for (const auto& l : a.letters) os << ' ' << l;
  os << "\n";
  for (int q = 0; q < a.num_states(); ++q) {
    os << "state " << a.state_names[q];
    if (q == a.initial) os << " init";
    os << "\n";
  }
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      os << "trans " << a.state_names[q] << ' ' << a.letters[li] << ' '
         << a.state_names[a.next[q][li]] << "\n";
  if (a.kind == AcceptanceKind::Parity) {
    for (int q = 0; q < a.num_states(); ++q)
      os << "color " << a.state_names[q] << ' ' << a.color[q] << "\n";
  } else {
    std::string word = a.kind == AcceptanceKind::Safety ? "unsafe" : "target";
    bool any = false;
    for (int q = 0; q < a.num_states(); ++q) any = any || a.marked[q];
    if (any) {
      os << word;
      for (int q = 0; q < a.num_states(); ++q)
        if (a.marked[q]) os << ' ' << a.state_names[q];
      os << "\n";
    }
  }
  return os.str();
}

BuiltinGame parse_game(const std::string& text, const std::string& dir) {
  auto lines = tokenize(text);
  if (lines.empty()) throw validation_error("empty game text");
  if (lines[0].tokens[0] != "kind") fail(lines[0].number, "expected a kind line");
  need(lines[0], 2);
  const std::string& kind = lines[0].tokens[1];
  bool dc = kind == "delayed-control";
  if (!dc && kind != "delay-game")
    fail(lines[0].number, "unknown game kind '" + kind + "'");

  Arena arena;
  std::vector<std::string> iletters, oletters;
  int lookahead = 0;
  std::vector<std::pair<std::string, std::string>> renamed;
  std::optional<AcceptanceKind> cond_kind;
  StateCondition sc;
  std::optional<OmegaAutomaton> aut;
  bool saw_init = false;
  bool in_condition = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "calphabet" || t[0] == "ialphabet") {
      if ((t[0] == "calphabet") != dc) fail(l.number, "alphabet keyword does not match the kind");
      need(l, 2);
      if (arena.num_states() > 0) fail(l.number, "alphabets must precede states");
      if (dc)
        arena.cletters.assign(t.begin() + 1, t.end());
      else
        iletters.assign(t.begin() + 1, t.end());
    } else if (t[0] == "ealphabet" || t[0] == "oalphabet") {
      if ((t[0] == "ealphabet") != dc) fail(l.number, "alphabet keyword does not match the kind");
      need(l, 2);
      if (arena.num_states() > 0) fail(l.number, "alphabets must precede states");
      if (dc)
        arena.eletters.assign(t.begin() + 1, t.end());
      else
        oletters.assign(t.begin() + 1, t.end());
    } else if (t[0] == "lookahead") {
      if (dc) fail(l.number, "lookahead only applies to delay games");
      need(l, 2);
      lookahead = parse_nat(l, t[1]);
    } else if (t[0] == "renamed") {
      if (dc) fail(l.number, "renamed only applies to delay games");
      need(l, 3);
      renamed.emplace_back(t[1], t[2]);
    } else if (t[0] == "state") {
      if (!dc) fail(l.number, "delay games have no states");
      need(l, 3);
      if (arena.state_index(t[1]) >= 0)
        fail(l.number, "duplicate state '" + t[1] + "'");
      Owner o;
      if (t[2] == "C")
        o = Owner::Controller;
      else if (t[2] == "E")
        o = Owner::Environment;
      else
        fail(l.number, "owner must be C or E, got '" + t[2] + "'");
      int s = arena.add_state(t[1], o);
      if (t.size() > 3) {
        if (t[3] != "init") fail(l.number, "unexpected '" + t[3] + "'");
        arena.initial = s;
        saw_init = true;
      }
    } else if (t[0] == "edge") {
      if (!dc) fail(l.number, "delay games have no edges");
      need(l, 4);
      int s = arena.state_index(t[1]);
      if (s < 0) fail(l.number, "unknown state '" + t[1] + "'");
      int li = index_of(arena.alphabet_of(s), t[2]);
      if (li < 0) fail(l.number, "letter '" + t[2] + "' not in the owner's alphabet");
      int d = arena.state_index(t[3]);
      if (d < 0) fail(l.number, "unknown state '" + t[3] + "'");
      arena.next[s][li] = d;
    } else if (t[0] == "condition") {
      need(l, 2);
      cond_kind = parse_kind_word(l, t[1]);
      sc.kind = *cond_kind;
      in_condition = true;
    } else if (in_condition && (t[0] == "unsafe" || t[0] == "target")) {
      bool want_unsafe = sc.kind == AcceptanceKind::Safety;
      if ((t[0] == "unsafe") != want_unsafe)
        fail(l.number, "'" + t[0] + "' does not match the condition kind");
      for (std::size_t j = 1; j < t.size(); ++j) sc.marked_states.push_back(t[j]);
    } else if (in_condition && t[0] == "color") {
      need(l, 3);
      sc.colors.emplace_back(t[1], parse_nat(l, t[2]));
    } else if (in_condition && t[0] == "automaton") {
      need(l, 2);
      auto path = std::filesystem::path(dir) / t[1];
      aut = parse_automaton(read_file(path.string()));
      if (aut->kind != *cond_kind)
        fail(l.number, "automaton kind does not match the condition line");
    } else {
      fail(l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!cond_kind) throw validation_error("game text lacks a condition");

  if (dc) {
    if (!saw_init && arena.num_states() > 0) arena.initial = 0;
    for (int s = 0; s < arena.num_states(); ++s)
      for (std::size_t li = 0; li < arena.alphabet_of(s).size(); ++li)
        if (arena.next[s][li] < 0)
          throw validation_error("missing edge from '" + arena.state_names[s] +
                                 "' on '" + arena.alphabet_of(s)[li] + "'");
    if (aut) {
      DelayedControlGame g{std::move(arena), std::move(*aut), std::nullopt};
      check_model(validate(g));
      return g;
    }
    return make_state_condition_game(std::move(arena), std::move(sc));
  }
  if (!aut) throw validation_error("delay games need an automaton condition");
  DelayGame g;
  g.lookahead = lookahead;
  g.iletters = std::move(iletters);
  g.oletters = std::move(oletters);
  g.condition = std::move(*aut);
  g.renamed = std::move(renamed);
  check_model(validate(g));
  return g;
}

BuiltinGame parse_game_file(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path().string();
  if (dir.empty()) dir = ".";
  return parse_game(read_file(path), dir);
}

GameText print_game(const BuiltinGame& g, const std::string& base_name) {
  GameText out;
  std::ostringstream os;
  if (const auto* dc = std::get_if<DelayedControlGame>(&g)) {
    os << "kind delayed-control\n";
    os << "calphabet";
    for (const auto& l : dc->arena.cletters) os << ' ' << l;
    os << "\nealphabet";
    for (const auto& l : dc->arena.eletters) os << ' ' << l;
    os << "\n";
    for (int s = 0; s < dc->arena.num_states(); ++s) {
      os << "state " << dc->arena.state_names[s] << ' '
         << (dc->arena.owner[s] == Owner::Controller ? 'C' : 'E');
      if (s == dc->arena.initial) os << " init";
      os << "\n";
    }
    for (int s = 0; s < dc->arena.num_states(); ++s) {
      const auto& alpha = dc->arena.alphabet_of(s);
      for (std::size_t li = 0; li < alpha.size(); ++li)
        os << "edge " << dc->arena.state_names[s] << ' ' << alpha[li] << ' '
           << dc->arena.state_names[dc->arena.next[s][li]] << "\n";
    }
    if (dc->shorthand) {
      const auto& sc = *dc->shorthand;
      os << "condition " << to_string(sc.kind) << "\n";
      if (sc.kind == AcceptanceKind::Parity) {
        for (const auto& [st, c] : sc.colors) os << "color " << st << ' ' << c << "\n";
      } else if (!sc.marked_states.empty()) {
        os << (sc.kind == AcceptanceKind::Safety ? "unsafe" : "target");
        for (const auto& st : sc.marked_states) os << ' ' << st;
        os << "\n";
      }
    } else {
      out.automaton_file = base_name + ".aut";
      out.automaton = print_automaton(dc->condition);
      os << "condition " << to_string(dc->condition.kind) << "\n";
      os << "automaton " << out.automaton_file << "\n";
    }
  } else {
    const auto& dg = std::get<DelayGame>(g);
    os << "kind delay-game\n";
    os << "ialphabet";
    for (const auto& l : dg.iletters) os << ' ' << l;
    os << "\noalphabet";
    for (const auto& l : dg.oletters) os << ' ' << l;
    os << "\nlookahead " << dg.lookahead << "\n";
    for (const auto& [from, to] : dg.renamed) os << "renamed " << from << ' ' << to << "\n";
    out.automaton_file = base_name + ".aut";
    out.automaton = print_automaton(dg.condition);
    os << "condition " << to_string(dg.condition.kind) << "\n";
    os << "automaton " << out.automaton_file << "\n";
  }
  out.game = os.str();
  return out;
}

StrategyMachine parse_machine(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw validation_error("empty machine text");
  if (lines[0].tokens[0] != "machine") fail(lines[0].number, "expected a machine line");
  need(lines[0], 2);
  StrategyMachine m;
  const std::string& side = lines[0].tokens[1];
  if (side == "emitter")
    m.side = StrategyMachine::Side::Emitter;
  else if (side == "responder")
    m.side = StrategyMachine::Side::Responder;
  else
    fail(lines[0].number, "machine side must be emitter or responder");
  m.memory_names.clear();
  m.init_blocks.clear();

  auto mem_of = [&](const Line& l, const std::string& w) {
    int i = index_of(m.memory_names, w);
    if (i < 0) fail(l.number, "unknown memory state '" + w + "'");
    return i;
  };
  auto in_of = [&](const Line& l, const std::string& w) {
    if (w == "eps") return StrategyMachine::kEps;
    int i = m.in_index(w);
    if (i < 0) fail(l.number, "unknown input letter '" + w + "'");
    return i;
  };
  auto out_of = [&](const Line& l, const std::string& w) {
    if (w == "eps") return StrategyMachine::kEps;
    int i = m.out_index(w);
    if (i < 0) fail(l.number, "unknown output letter '" + w + "'");
    return i;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "in-alphabet") {
      need(l, 2);
      m.in_letters.assign(t.begin() + 1, t.end());
    } else if (t[0] == "out-alphabet") {
      need(l, 2);
      m.out_letters.assign(t.begin() + 1, t.end());
    } else if (t[0] == "memory") {
      need(l, 2);
      m.memory_names.assign(t.begin() + 1, t.end());
    } else if (t[0] == "init") {
      need(l, 2);
      m.memory_init = mem_of(l, t[1]);
    } else if (t[0] == "lead-in") {
      need(l, 2);
      m.lead_in = parse_nat(l, t[1]);
    } else if (t[0] == "init-block") {
      need(l, 2);
      Rat p;
      try {
        p = parse_rat(t[1]);
      } catch (const usage_error& e) {
        fail(l.number, e.what());
      }
      std::vector<int> block;
      for (std::size_t j = 2; j < t.size(); ++j) block.push_back(out_of(l, t[j]));
      m.init_blocks.emplace_back(std::move(block), p);
    } else if (t[0] == "out") {
      need(l, 4);
      int mem = mem_of(l, t[1]);
      int in = in_of(l, t[2]);
      LetterDist dist;
      for (std::size_t j = 3; j < t.size(); ++j) {
        auto colon = t[j].rfind(':');
        if (colon == std::string::npos) {
          dist.emplace_back(out_of(l, t[j]), Rat(1));
        } else {
          try {
            dist.emplace_back(out_of(l, t[j].substr(0, colon)),
                              parse_rat(t[j].substr(colon + 1)));
          } catch (const usage_error& e) {
            fail(l.number, e.what());
          }
        }
      }
      m.output[{mem, in}] = std::move(dist);
    } else if (t[0] == "next") {
      need(l, 5);
      m.update[{mem_of(l, t[1]), in_of(l, t[2]), out_of(l, t[3])}] = mem_of(l, t[4]);
    } else {
      fail(l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (m.memory_names.empty()) m.memory_names = {"m0"};
  check_model(validate(m));
  return m;
}

std::string print_machine(const StrategyMachine& m) {
  std::ostringstream os;
  os << "machine "
     << (m.side == StrategyMachine::Side::Emitter ? "emitter" : "responder")
     << "\n";
  os << "in-alphabet";
  for (const auto& l : m.in_letters) os << ' ' << l;
  os << "\nout-alphabet";
  for (const auto& l : m.out_letters) os << ' ' << l;
  os << "\nmemory";
  for (const auto& n : m.memory_names) os << ' ' << n;
  os << "\ninit " << m.memory_names[m.memory_init] << "\n";
  if (m.side == StrategyMachine::Side::Responder)
    os << "lead-in " << m.lead_in << "\n";
  for (const auto& [block, p] : m.init_blocks) {
    os << "init-block " << rat_str(p);
    for (int l : block) os << ' ' << m.out_letters[l];
    os << "\n";
  }
  auto in_name = [&](int i) { return i < 0 ? std::string("eps") : m.in_letters[i]; };
  auto out_name = [&](int i) { return i < 0 ? std::string("eps") : m.out_letters[i]; };
  for (const auto& [key, dist] : m.output) {
    os << "out " << m.memory_names[key.first] << ' ' << in_name(key.second);
    if (dist.size() == 1 && dist[0].second == 1) {
      os << ' ' << out_name(dist[0].first);
    } else {
      for (const auto& [l, p] : dist) os << ' ' << out_name(l) << ':' << rat_str(p);
    }
    os << "\n";
  }
  for (const auto& [key, mem] : m.update)
    os << "next " << m.memory_names[key[0]] << ' ' << in_name(key[1]) << ' '
       << out_name(key[2]) << ' ' << m.memory_names[mem] << "\n";
  return os.str();
}

}  // namespace delcon
