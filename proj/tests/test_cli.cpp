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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "delcon/builtins.hpp"
#include "delcon/cli.hpp"
#include "delcon/io.hpp"

using namespace delcon;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> argv) {
  std::ostringstream out, err;
  int code = run_command(argv, out, err);
  return {code, out.str(), err.str()};
}

std::string examples_path(const std::string& file) {
  return std::string(DELCON_SOURCE_DIR) + "/examples/" + file;
}

}  // namespace

TEST_CASE("shipped golden files equal the builtins") {
  CHECK(parse_game_file(examples_path("fig4.game")) ==
        BuiltinGame(builtin("fig4_predict")));
  CHECK(parse_game_file(examples_path("fig6.game")) ==
        BuiltinGame(builtin("fig6_mismatch")));
  CHECK(parse_game_file(examples_path("mismatch_3.game")) ==
        BuiltinGame(builtin("mismatch", {3})));
  for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 5}})
    CHECK(parse_game_file(examples_path("modular_" + std::to_string(n) + "_" +
                                        std::to_string(m) + ".game")) ==
          BuiltinGame(builtin("modular", {n, m})));
  CHECK(parse_game_file(examples_path("ex26.game")) ==
        BuiltinGame(builtin("ex26", {1})));
}

TEST_CASE("golden files are byte-stable under reprint") {
  for (const std::string base : {"fig4", "ex26"}) {
    std::ifstream f(examples_path(base + ".game"));
    std::stringstream shipped;
    shipped << f.rdbuf();
    GameText t = print_game(parse_game_file(examples_path(base + ".game")), base);
    CHECK(t.game == shipped.str());
  }
}

TEST_CASE("solve-dg on the shipped ex26 reports PlayerI at k=1") {
  Run r = cli({"solve-dg", examples_path("ex26.game"), "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"winner\": \"PlayerI\"") != std::string::npos);
}

TEST_CASE("value on the shipped modular_1_3 is exactly 1/3") {
  Run r = cli({"value", examples_path("modular_1_3.game"), "--delta", "2", "--exact"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": \"1/3\"") != std::string::npos);
}

TEST_CASE("odd delay is a usage error with exit code 2") {
  Run r = cli({"solve-dc", examples_path("fig4.game"), "--delta", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("delay must be even") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("validation failures exit with 4") {
  namespace fs = std::filesystem;
  fs::path bad = fs::temp_directory_path() / "delcon_bad.game";
  std::ofstream(bad) << "kind delayed-control\nwhatever\n";
  Run r = cli({"solve-dc", bad.string(), "--delta", "0"});
  CHECK(r.code == 4);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("blowing the construction budget exits with 3") {
  Run r = cli({"solve-dg", examples_path("ex26.game"), "--k", "40"});
  CHECK(r.code == 3);
}

TEST_CASE("reports are byte-identical across equal invocations") {
  auto args = std::vector<std::string>{
      "simulate", examples_path("fig4.game"), "--delta", "2",
      "--trials", "2000", "--seed", "9", "--horizon", "4"};
  Run a = cli(args);
  Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // A different seed must change the digested inputs.
  args.back() = "5";
  args[7] = "10";
  Run c = cli(args);
  CHECK(c.out != a.out);
}

TEST_CASE("classify surfaces the randomized verdicts") {
  Run pure = cli({"classify", examples_path("fig4.game"), "--delta", "2"});
  CHECK(pure.code == 0);
  CHECK(pure.out.find("UndeterminedPure") != std::string::npos);
  Run rnd = cli({"classify", examples_path("fig4.game"), "--delta", "2", "--randomized"});
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("\"value\": \"1/2\"") != std::string::npos);
}

TEST_CASE("transform emits parseable games in both directions") {
  Run r = cli({"transform", "dc-to-dg", examples_path("fig4.game"), "--delta", "2"});
  CHECK(r.code == 0);
  Run r2 = cli({"transform", "dg-to-dc", examples_path("ex26.game")});
  CHECK(r2.code == 0);
}

TEST_CASE("unknown subcommand exits with 2") {
  Run r = cli({"frobnicate"});
  CHECK(r.code == 2);
}
