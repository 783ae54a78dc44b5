// Copyright 2026 The Dressian Authors.
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

#include "dressian/linalg.hpp"

#include <algorithm>

#include "dressian/errors.hpp"

namespace dressian::linalg {

void RowEchelon::reduce(RationalVector& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
    }
  }
}

bool RowEchelon::add(RationalVector row) {
  if (row.size() != cols_) throw ParameterError("row length mismatch");
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(),
                         [](const Rational& x) { return x != 0; });
  if (it == row.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - row.begin());
  const Rational inv = 1 / row[p];
  for (auto& x : row) x *= inv;
  // Keep existing rows fully reduced against the new pivot.
  for (auto& other : rows_) {
    if (other[p] == 0) continue;
    const Rational f = other[p];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) other[c] -= f * row[c];
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowEchelon::spans(const RationalVector& row) const {
  RationalVector copy = row;
  reduce(copy);
  return std::all_of(copy.begin(), copy.end(),
                     [](const Rational& x) { return x == 0; });
}

Matrix RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      v[pivots_[r]] = -rows_[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& r : rows) ech.add(r);
  return ech.rank();
}

Matrix nullspace(const Matrix& rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& r : rows) ech.add(r);
  return ech.nullspace();
}

std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b,
                                    std::size_t cols) {
  // Eliminate on the augmented matrix [A | b].
  RowEchelon ech(cols + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalVector row = a[i];
    row.push_back(b[i]);
    ech.add(std::move(row));
  }
  RationalVector x(cols);
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const std::size_t p = ech.pivots()[r];
    if (p == cols) return std::nullopt;
    x[p] = ech.rows()[r][cols];
  }
  return x;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector normalize_direction(RationalVector v) {
  for (const auto& x : v) {
    if (x != 0) {
      const Rational scale = 1 / abs(x);
      for (auto& y : v) y *= scale;
      return v;
    }
  }
  return v;
}

}  // namespace dressian::linalg
