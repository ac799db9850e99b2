// Copyright 2026 The kip Authors
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

#include "kip/linalg.h"

#include <utility>

#include "kip/error.h"

namespace kip {
namespace {

// Reduces [a | rhs] in place; rhs holds any number of right-hand columns.
bool GaussJordan(RatMatrix& a, RatMatrix& rhs) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rat inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (auto& v : rhs[col]) v *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rat factor = a[row][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      for (size_t k = 0; k < rhs[row].size(); ++k) {
        rhs[row][k] -= factor * rhs[col][k];
      }
    }
  }
  return true;
}

void CheckSquare(const RatMatrix& a, size_t rows) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    }
  }
  if (rows != a.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side size");
  }
}

}  // namespace

std::optional<std::vector<Rat>> SolveLinearSystem(RatMatrix a,
                                                  std::vector<Rat> b) {
  CheckSquare(a, b.size());
  RatMatrix rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs[i] = {std::move(b[i])};
  if (!GaussJordan(a, rhs)) return std::nullopt;
  std::vector<Rat> x(rhs.size());
  for (size_t i = 0; i < rhs.size(); ++i) x[i] = std::move(rhs[i][0]);
  return x;
}

std::optional<RatMatrix> Invert(RatMatrix a) {
  CheckSquare(a, a.size());
  const size_t n = a.size();
  RatMatrix identity(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i) identity[i][i] = 1;
  if (!GaussJordan(a, identity)) return std::nullopt;
  return identity;
}

}  // namespace kip
