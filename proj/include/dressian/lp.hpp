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

#ifndef DRESSIAN_LP_HPP_
#define DRESSIAN_LP_HPP_

#include <cstddef>
#include <vector>

#include "dressian/rational.hpp"

// Exact rational linear programming: a dense two-phase primal simplex with
// Bland's anti-cycling rule. Problem sizes in this library stay below a few
// hundred rows, where a dense tableau over GMP rationals is adequate.
namespace dressian::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  RationalVector coeffs;
  Relation relation;
  Rational rhs;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective;
  RationalVector x;

  bool optimal() const { return status == Status::kOptimal; }
};

class LinearProgram {
 public:
  // Variables are free unless marked nonnegative.
  explicit LinearProgram(std::size_t num_vars)
      : num_vars_(num_vars), nonneg_(num_vars, false), objective_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  void set_nonnegative(std::size_t var) { nonneg_.at(var) = true; }
  void set_all_nonnegative() { nonneg_.assign(num_vars_, true); }

  void add(RationalVector coeffs, Relation relation, Rational rhs);
  void add_equal(RationalVector coeffs, Rational rhs) {
    add(std::move(coeffs), Relation::kEqual, std::move(rhs));
  }
  void add_less_equal(RationalVector coeffs, Rational rhs) {
    add(std::move(coeffs), Relation::kLessEqual, std::move(rhs));
  }
  void add_greater_equal(RationalVector coeffs, Rational rhs) {
    add(std::move(coeffs), Relation::kGreaterEqual, std::move(rhs));
  }

  void minimize(RationalVector objective);
  void maximize(RationalVector objective);

  Solution solve() const;

  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::size_t num_vars_;
  std::vector<bool> nonneg_;
  std::vector<Constraint> constraints_;
  RationalVector objective_;
  bool maximize_ = false;
};

}  // namespace dressian::lp

#endif  // DRESSIAN_LP_HPP_
