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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "delcon/game.hpp"

namespace delcon {

using BuiltinGame = std::variant<DelayedControlGame, DelayGame>;

/// Canonical built-in games. Names and parameters:
///   fig4_predict        coin game: environment tries to predict the
///                       controller's second letter; safety for controller.
///   fig6_mismatch       unbounded mismatch game; reachability.
///   mismatch r          mismatch must happen within rounds 1..r (r >= 1).
///   modular n m         one-shot: controller picks a, environment picks b,
///                       controller wins iff (a+b) mod m < n (0 <= n < m).
///   ex26 [k]            delay game over {1..4} vs {1'..4'}; Player O must
///                       pick b0 outside {a0,a1,a2}; lookahead k (default 1).
/// The encodings are bit-stable: repeated calls yield identical models.
BuiltinGame builtin(const std::string& name, const std::vector<int>& params = {});

std::vector<std::string> builtin_names();

/// Convenience accessors; throw usage_error on a kind mismatch.
DelayedControlGame builtin_dc(const std::string& name, const std::vector<int>& params = {});
DelayGame builtin_dg(const std::string& name, const std::vector<int>& params = {});

DelayGame with_lookahead(DelayGame g, int k);

}  // namespace delcon
