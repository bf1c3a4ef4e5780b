// Copyright 2026 The persuade Authors
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

#include "persuasion/linalg.hpp"

namespace persuasion::linalg {

namespace {

// Row-reduces [a | b] in place. Returns pivot column per reduced row.
std::vector<int> eliminate(Matrix& a, std::vector<Rat>* b) {
  std::vector<int> pivot_cols;
  if (a.empty()) return pivot_cols;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    if (b) std::swap((*b)[pivot], (*b)[row]);
    Rat inv = 1 / a[row][col];
    for (int j = col; j < cols; ++j) a[row][j] *= inv;
    if (b) (*b)[row] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
      if (b) (*b)[i] -= factor * (*b)[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(Matrix m) {
  return static_cast<int>(eliminate(m, nullptr).size());
}

std::optional<std::vector<Rat>> solve_unique(Matrix a, std::vector<Rat> b) {
  if (a.empty()) return std::nullopt;
  int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots = eliminate(a, &b);
  int r = static_cast<int>(pivots.size());
  for (std::size_t i = r; i < a.size(); ++i) {
    if (b[i] != 0) return std::nullopt;  // inconsistent
  }
  if (r < cols) return std::nullopt;  // underdetermined
  std::vector<Rat> x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
  return x;
}

bool consistent(Matrix a, std::vector<Rat> b) {
  if (a.empty()) return true;
  std::vector<int> pivots = eliminate(a, &b);
  for (std::size_t i = pivots.size(); i < a.size(); ++i) {
    if (b[i] != 0) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> kernel_vector(const Matrix& a) {
  if (a.empty()) return std::nullopt;
  Matrix m = a;
  int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = eliminate(m, nullptr);
  if (static_cast<int>(pivots.size()) >= cols) return std::nullopt;

  // Pick the first non-pivot column as the free variable.
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rat> x(cols, Rat(0));
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = -m[i][free_col];
  }
  return x;
}

}  // namespace persuasion::linalg
