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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcon/automaton.hpp"
#include "delcon/base.hpp"

namespace delcon {

/// Exact value, one-sided bound, interval, or Monte Carlo estimate in [0,1].
struct ValueReport {
  enum class Kind { Exact, LowerBound, UpperBound, Interval, Estimate };
  Kind kind = Kind::Exact;
  Rat lo, hi;  // Exact: lo == hi; Estimate: 99% interval, clipped to [0,1]
  std::optional<Rat> estimate;  // Estimate only: win frequency
  std::optional<int> horizon_used;
  std::optional<std::uint64_t> sample_count;
  std::optional<std::uint64_t> seed;
  std::optional<Lasso> counterexample;
  // Optimal mixed profiles over labeled pure strategies, when produced.
  std::vector<std::pair<std::string, Rat>> row_profile;
  std::vector<std::pair<std::string, Rat>> col_profile;

  Rat value() const { return lo; }
  static ValueReport exact(Rat v) {
    ValueReport r;
    r.kind = Kind::Exact;
    r.lo = v;
    r.hi = v;
    return r;
  }
};

std::string to_string(ValueReport::Kind k);

}  // namespace delcon
