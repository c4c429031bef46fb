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

#include <random>

#include "delcon/builtins.hpp"
#include "delcon/randomized.hpp"
#include "delcon/solve_delay.hpp"
#include "helpers.hpp"

using namespace delcon;
using namespace delcon::testutil;

TEST_CASE("modular games have value n/m under delay 2") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 5}}) {
    DelayedControlGame g = builtin_dc("modular", {n, m});
    CAPTURE(n);
    CAPTURE(m);
    CHECK(classify_pure(g, 0) == PureVerdict::EnvSure);
    // The pure verdict stays EnvSure at delta 2 (the pure environment
    // plays delay-free), but the mixed normal form is worth n/m.
    CHECK(classify_randomized(g, 2, {3, false}).kind ==
          RandomizedClassification::Kind::EnvSure);
    ValueReport v = normal_form_value(g, 2, {3, false});
    CHECK(v.kind == ValueReport::Kind::Exact);
    CHECK(v.value() == Rat(n, m));
    CHECK(1 - v.value() == Rat(m - n, m));
  }
}

TEST_CASE("fig4 classifies to value 1/2 at delta 2") {
  DelayedControlGame g = builtin_dc("fig4_predict");
  RandomizedClassification c = classify_randomized(g, 2, {3, false});
  REQUIRE(c.kind == RandomizedClassification::Kind::Value);
  CHECK(*c.value == Rat(1, 2));
  CHECK(*c.env_value == Rat(1, 2));
  CHECK(classify_randomized(g, 0, {3, false}).kind ==
        RandomizedClassification::Kind::ControllerSure);
}

TEST_CASE("mismatch(3) is pinned to 7/8 from both sides") {
  DelayedControlGame g = builtin_dc("mismatch", {3});
  HorizonPolicy hp{4, false};
  ValueReport lo = evaluate_guaranteed(g, 2, uniform_controller_machine(g, 2), hp);
  CHECK(lo.value() == Rat(7, 8));
  ValueReport hi = best_response_controller(g, 2, uniform_environment_machine(g), hp);
  CHECK(hi.hi == Rat(7, 8));
}

TEST_CASE("fig6 value profile is 1 - 2^-T") {
  DelayedControlGame g = builtin_dc("fig6_mismatch");
  std::vector<int> horizons;
  for (int t = 1; t <= 10; ++t) horizons.push_back(t);
  auto profile = value_profile(g, 2, uniform_controller_machine(g, 2), horizons);
  REQUIRE(profile.size() == 10);
  Rat prev = 0;
  for (int t = 1; t <= 10; ++t) {
    CHECK(profile[t - 1].first == t);
    CHECK(profile[t - 1].second == 1 - Rat(1, BigInt(1) << t));
    CHECK(profile[t - 1].second >= prev);  // non-decreasing
    prev = profile[t - 1].second;
  }
}

TEST_CASE("sandwich bounds bracket the exact value") {
  std::mt19937 rng(41);
  int checked = 0;
  while (checked < 30) {
    DelayedControlGame g = random_dc_game(rng, 5, 2, 2, /*allow_parity=*/false);
    int delta = 2 * pick(rng, 0, 1);
    HorizonPolicy hp{3, false};
    if (!is_absorbing_within(g, delta, hp.horizon)) continue;
    ValueReport exact;
    try {
      exact = normal_form_value(g, delta, hp);
    } catch (const budget_error&) {
      continue;
    }
    ValueReport lo = evaluate_guaranteed(g, delta, uniform_controller_machine(g, delta), hp);
    ValueReport hi = best_response_controller(g, delta, uniform_environment_machine(g), hp);
    CAPTURE(checked);
    REQUIRE(lo.value() <= exact.value());
    REQUIRE(exact.value() <= hi.hi);
    REQUIRE(exact.value() >= 0);
    REQUIRE(exact.value() <= 1);
    ++checked;
  }
}

TEST_CASE("truncation kinds and parity rejection") {
  DelayedControlGame fig6 = builtin_dc("fig6_mismatch");
  // Reachability, not absorbing: guaranteed values are lower bounds.
  ValueReport r = evaluate_guaranteed(fig6, 2, uniform_controller_machine(fig6, 2), {2, false});
  CHECK(r.kind == ValueReport::Kind::LowerBound);

  std::mt19937 rng(43);
  DelayedControlGame parity = random_dc_game(rng, 4, 2, 2, true);
  while (parity.condition.kind != AcceptanceKind::Parity)
    parity = random_dc_game(rng, 4, 2, 2, true);
  CHECK_THROWS_AS(normal_form_value(parity, 0, {2, false}), usage_error);
}

TEST_CASE("strategy cap raises budget_error") {
  DelayedControlGame g = builtin_dc("mismatch", {3});
  NormalFormOptions opts;
  opts.strategy_cap = 2;
  CHECK_THROWS_AS(normal_form_value(g, 2, {4, false}, opts), budget_error);
}

TEST_CASE("simulation is reproducible and honestly calibrated") {
  DelayedControlGame g = builtin_dc("fig4_predict");
  StrategyMachine c = uniform_controller_machine(g, 2);
  StrategyMachine e = uniform_environment_machine(g);
  HorizonPolicy hp{4, false};
  ValueReport a = simulate(g, 2, c, e, hp, 10000, 7);
  ValueReport b = simulate(g, 2, c, e, hp, 10000, 7);
  CHECK(*a.estimate == *b.estimate);
  CHECK(a.lo == b.lo);
  CHECK(a.hi == b.hi);
  CHECK(*a.sample_count == 10000);

  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ValueReport r = simulate(g, 2, c, e, hp, 10000, seed);
    if (r.lo <= Rat(1, 2) && Rat(1, 2) <= r.hi) ++covered;
  }
  CHECK(covered >= 99);
}
