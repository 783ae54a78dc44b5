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

#ifndef DRESSIAN_LINALG_HPP_
#define DRESSIAN_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dressian/rational.hpp"

namespace dressian::linalg {

using Matrix = std::vector<RationalVector>;

// Reduced row echelon form maintained incrementally. Rows that are linear
// combinations of earlier rows are rejected by add().
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when `row` increased the rank.
  bool add(RationalVector row);
  bool spans(const RationalVector& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Matrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Basis of {x : r.x = 0 for every stored row r}.
  Matrix nullspace() const;

 private:
  void reduce(RationalVector& row) const;

  std::size_t cols_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& rows, std::size_t cols);
Matrix nullspace(const Matrix& rows, std::size_t cols);

// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b,
                                    std::size_t cols);

Rational dot(const RationalVector& a, const RationalVector& b);

// Scales a nonzero vector so that its first nonzero entry has absolute
// value one; leaves the direction (including sign) unchanged.
RationalVector normalize_direction(RationalVector v);

}  // namespace dressian::linalg

#endif  // DRESSIAN_LINALG_HPP_
