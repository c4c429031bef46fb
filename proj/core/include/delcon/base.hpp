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
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace delcon {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr const char* kVersion = "0.1.0";

/// Raised when a model fails validation.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed the configured state budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised on bad arguments (odd delay, wrong machine shape, unknown name, ...).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Serializes a rational as "p/q" in lowest terms ("3/4", "1/1", "0/1").
std::string rat_str(const Rat& r);

/// Parses "p/q" or a bare integer.
Rat parse_rat(const std::string& s);

/// Index of `name` in `names`, or -1.
int index_of(const std::vector<std::string>& names, const std::string& name);

/// FNV-1a 64-bit, used for input digests in reports.
std::uint64_t fnv1a(const std::string& data, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace delcon
