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

#include "delcon/base.hpp"

#include <algorithm>
#include <cctype>

namespace delcon {

std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string p = s.substr(0, slash);
  if (!is_integer_text(p)) throw usage_error("bad rational: " + s);
  if (slash == std::string::npos) return Rat(BigInt(p));
  std::string q = s.substr(slash + 1);
  if (!is_integer_text(q)) throw usage_error("bad rational: " + s);
  BigInt den(q);
  if (den == 0) throw usage_error("zero denominator in rational: " + s);
  return Rat(BigInt(p), den);
}

int index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace delcon
