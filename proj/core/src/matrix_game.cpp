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

#include "delcon/matrix_game.hpp"

#include <algorithm>

namespace delcon {

namespace {

void check_matrix(const std::vector<std::vector<Rat>>& m) {
  if (m.empty() || m[0].empty()) throw usage_error("empty payoff matrix");
  for (const auto& row : m)
    if (row.size() != m[0].size())
      throw usage_error("payoff matrix is not rectangular");
}

}  // namespace

MatrixSolution solve_matrix_exact(const std::vector<std::vector<Rat>>& m) {
  check_matrix(m);
  int nr = static_cast<int>(m.size());
  int nc = static_cast<int>(m[0].size());

  // Shift entries positive so the value is positive and the classic
  // normalization applies: max sum(w) s.t. M'w <= 1, w >= 0; then
  // value' = 1/sum(w), column strategy y = w/sum(w), and the row
  // strategy falls out of the dual (slack costs in the final tableau).
  Rat shift = 0;
  for (const auto& row : m)
    for (const auto& e : row) shift = std::min(shift, e);
  shift = 1 - shift;

  int cols = nc + nr + 1;  // variables, slacks, rhs
  std::vector<std::vector<Rat>> t(nr + 1, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) t[i][j] = m[i][j] + shift;
    t[i][nc + i] = 1;
    t[i][cols - 1] = 1;
  }
  for (int j = 0; j < nc; ++j) t[nr][j] = -1;
  std::vector<int> basis(nr);
  for (int i = 0; i < nr; ++i) basis[i] = nc + i;

  while (true) {
    // Bland's rule: smallest-index entering column.
    int enter = -1;
    for (int j = 0; j < cols - 1; ++j)
      if (t[nr][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < nr; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw usage_error("unbounded matrix game program");
    Rat piv = t[leave][enter];
    for (auto& e : t[leave]) e /= piv;
    for (int i = 0; i <= nr; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat sum_w = t[nr][cols - 1];
  MatrixSolution sol;
  sol.value = 1 / sum_w - shift;
  sol.col.assign(nc, Rat(0));
  for (int i = 0; i < nr; ++i)
    if (basis[i] < nc) sol.col[basis[i]] = t[i][cols - 1] / sum_w;
  sol.row.assign(nr, Rat(0));
  for (int i = 0; i < nr; ++i) sol.row[i] = t[nr][nc + i] / sum_w;
  return sol;
}

Rat best_response_value_row(const std::vector<std::vector<Rat>>& m,
                            const std::vector<Rat>& col) {
  check_matrix(m);
  Rat best;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rat v = 0;
    for (std::size_t j = 0; j < col.size(); ++j) v += m[i][j] * col[j];
    if (i == 0 || v > best) best = v;
  }
  return best;
}

Rat best_response_value_col(const std::vector<std::vector<Rat>>& m,
                            const std::vector<Rat>& row) {
  check_matrix(m);
  Rat best;
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    Rat v = 0;
    for (std::size_t i = 0; i < m.size(); ++i) v += m[i][j] * row[i];
    if (j == 0 || v < best) best = v;
  }
  return best;
}

MatrixSandwich solve_matrix_iterative(const std::vector<std::vector<Rat>>& m,
                                      int iterations) {
  check_matrix(m);
  if (iterations < 1) throw usage_error("iteration count must be positive");
  int nr = static_cast<int>(m.size());
  int nc = static_cast<int>(m[0].size());
  std::vector<Rat> row_payoff(nr, Rat(0)), col_payoff(nc, Rat(0));
  std::vector<int> row_count(nr, 0), col_count(nc, 0);
  int ri = 0, ci = 0;
  for (int it = 0; it < iterations; ++it) {
    ++row_count[ri];
    ++col_count[ci];
    for (int j = 0; j < nc; ++j) col_payoff[j] += m[ri][j];
    for (int i = 0; i < nr; ++i) row_payoff[i] += m[i][ci];
    ri = 0;
    for (int i = 1; i < nr; ++i)
      if (row_payoff[i] > row_payoff[ri]) ri = i;
    ci = 0;
    for (int j = 1; j < nc; ++j)
      if (col_payoff[j] < col_payoff[ci]) ci = j;
  }
  MatrixSandwich s;
  s.row.assign(nr, Rat(0));
  s.col.assign(nc, Rat(0));
  for (int i = 0; i < nr; ++i) s.row[i] = Rat(row_count[i], iterations);
  for (int j = 0; j < nc; ++j) s.col[j] = Rat(col_count[j], iterations);
  s.lo = best_response_value_col(m, s.row);
  s.hi = best_response_value_row(m, s.col);
  return s;
}

}  // namespace delcon
