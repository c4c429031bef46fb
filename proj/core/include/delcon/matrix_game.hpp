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

#include <vector>

#include "delcon/base.hpp"

namespace delcon {

/// Value and optimal mixed strategies of the zero-sum matrix game M
/// (row player maximizes). Exact rational arithmetic throughout.
struct MatrixSolution {
  Rat value;
  std::vector<Rat> row;  // mixed strategy, sums to 1
  std::vector<Rat> col;
};

/// Exact solve via linear programming (simplex with Bland's rule).
MatrixSolution solve_matrix_exact(const std::vector<std::vector<Rat>>& m);

/// Fictitious play; lo/hi sandwich the value via the best responses to
/// the empirical average strategies after `iterations` rounds.
struct MatrixSandwich {
  Rat lo, hi;
  std::vector<Rat> row;
  std::vector<Rat> col;
};
MatrixSandwich solve_matrix_iterative(const std::vector<std::vector<Rat>>& m,
                                      int iterations);

/// max_u min_v u^T M v for given profiles; helper for certificates.
Rat best_response_value_row(const std::vector<std::vector<Rat>>& m,
                            const std::vector<Rat>& col);
Rat best_response_value_col(const std::vector<std::vector<Rat>>& m,
                            const std::vector<Rat>& row);

}  // namespace delcon
