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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <variant>

#include "delcon/automaton.hpp"
#include "delcon/base.hpp"
#include "delcon/builtins.hpp"
#include "delcon/io.hpp"
#include "delcon/machine.hpp"
#include "helpers.hpp"

using namespace delcon;
using namespace delcon::testutil;

TEST_CASE("rational serialization round-trips") {
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(0)) == "0/1");
  CHECK(rat_str(Rat(2, 2)) == "1/1");
  CHECK(parse_rat("7/21") == Rat(1, 3));
  CHECK(parse_rat("5") == Rat(5));
}

TEST_CASE("fnv1a digest is stable") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("delcon") == fnv1a("delcon"));
  CHECK(fnv1a("a") != fnv1a("b"));
}

TEST_CASE("complement partitions all short lassos") {
  std::mt19937 rng(11);
  for (int round = 0; round < 100; ++round) {
    OmegaAutomaton a = random_automaton(rng, {"0", "1"}, 5);
    OmegaAutomaton c = complement_of(a);
    // All binary words u, v with |u| <= 5, 1 <= |v| <= 5.
    for (int lu = 0; lu <= 5; ++lu)
      for (int wu = 0; wu < 1 << lu; ++wu) {
        std::vector<int> u(lu);
        for (int i = 0; i < lu; ++i) u[i] = (wu >> i) & 1;
        for (int lv = 1; lv <= 5; ++lv)
          for (int wv = 0; wv < 1 << lv; ++wv) {
            std::vector<int> v(lv);
            for (int i = 0; i < lv; ++i) v[i] = (wv >> i) & 1;
            bool in_a = run_automaton_idx(a, u, v);
            bool in_c = run_automaton_idx(c, u, v);
            REQUIRE(in_a != in_c);
          }
      }
    CHECK(!difference_witness(a, a).has_value());
  }
}

TEST_CASE("difference witness separates distinct languages") {
  OmegaAutomaton all;
  all.letters = {"0", "1"};
  all.add_state("q");
  all.next = {{0, 0}};
  all.kind = AcceptanceKind::Safety;
  all.marked = {false};
  OmegaAutomaton none = all;
  none.marked = {true};
  auto w = difference_witness(all, none);
  REQUIRE(w.has_value());
  CHECK(run_automaton(all, w->stem, w->cycle) != run_automaton(none, w->stem, w->cycle));
}

TEST_CASE("saturation preserves the language") {
  std::mt19937 rng(12);
  for (int round = 0; round < 50; ++round) {
    OmegaAutomaton a = random_automaton(rng, {"0", "1"}, 4, /*allow_parity=*/false);
    CHECK(!difference_witness(a, saturated(a)).has_value());
  }
}

TEST_CASE("normalize_colors preserves language and compresses range") {
  OmegaAutomaton a;
  a.letters = {"0"};
  a.add_state("p");
  a.add_state("q");
  a.next = {{1}, {0}};
  a.kind = AcceptanceKind::Parity;
  a.color = {4, 7};
  OmegaAutomaton b = normalize_colors(a);
  CHECK(*std::max_element(b.color.begin(), b.color.end()) <= 1);
  CHECK(!difference_witness(a, b).has_value());
}

TEST_CASE("automaton text round-trip") {
  std::mt19937 rng(13);
  for (int round = 0; round < 50; ++round) {
    OmegaAutomaton a = random_automaton(rng, {"l0", "l1"}, 4);
    CHECK(parse_automaton(print_automaton(a)) == a);
  }
}

TEST_CASE("game text round-trip for every builtin") {
  for (const auto& name : builtin_names()) {
    BuiltinGame g = builtin(name, name == "mismatch"  ? std::vector<int>{2}
                                  : name == "modular" ? std::vector<int>{1, 3}
                                                      : std::vector<int>{});
    GameText t = print_game(g, "roundtrip");
    std::string text = t.game;
    if (!t.automaton.empty()) {
      // Inline the referenced automaton through a scratch directory.
      namespace fs = std::filesystem;
      fs::path dir = fs::temp_directory_path() / "delcon_roundtrip";
      fs::create_directories(dir);
      std::ofstream(dir / t.automaton_file) << t.automaton;
      std::ofstream(dir / "roundtrip.game") << t.game;
      BuiltinGame back = parse_game_file((dir / "roundtrip.game").string());
      CHECK(back == g);
      continue;
    }
    BuiltinGame back = parse_game(text);
    CHECK(back == g);
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_game("kind delayed-control\nbogus line\n"), validation_error);
  try {
    parse_game("kind delayed-control\nbogus line\n");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("machine text round-trip") {
  DelayedControlGame g = builtin_dc("fig4_predict");
  for (const StrategyMachine& m :
       {uniform_controller_machine(g, 2), uniform_environment_machine(g),
        pure_emitter(g.arena.eletters, g.arena.cletters, {"h", "h"},
                     {{"h", "t"}, {"t", "h"}})}) {
    StrategyMachine back = parse_machine(print_machine(m));
    CHECK(back == m);
  }
}

TEST_CASE("uniform machines validate against their games") {
  std::mt19937 rng(14);
  for (int round = 0; round < 20; ++round) {
    DelayedControlGame g = random_dc_game(rng);
    CHECK(validate(g).empty());
    CHECK(validate(uniform_controller_machine(g, 4)).empty());
    CHECK(validate(uniform_environment_machine(g)).empty());
  }
}

TEST_CASE("builtins are bit-stable") {
  for (const auto& name : builtin_names()) {
    std::vector<int> params = name == "mismatch"  ? std::vector<int>{3}
                              : name == "modular" ? std::vector<int>{2, 3}
                                                  : std::vector<int>{};
    CHECK(builtin(name, params) == builtin(name, params));
  }
  CHECK_THROWS_AS(builtin("nonsense"), usage_error);
  CHECK_THROWS_AS(builtin_dc("ex26"), usage_error);
  CHECK_THROWS_AS(builtin_dg("fig4_predict"), usage_error);
}
