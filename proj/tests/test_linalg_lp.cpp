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


#include <doctest.h>

#include <random>

#include "dressian/linalg.hpp"
#include "dressian/lp.hpp"

using namespace dressian;
using linalg::Matrix;

namespace {

// Multiply a matrix by a vector.
RationalVector times(const Matrix& a, const RationalVector& x) {
  RationalVector y;
  for (const auto& row : a) y.push_back(linalg::dot(row, x));
  return y;
}

}  // namespace

TEST_CASE("rank and nullspace are consistent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 4;
    Matrix a(rows, RationalVector(cols));
    for (auto& r : a) {
      for (auto& x : r) x = d(rng);
    }
    if (trial % 3 == 0 && rows > 1) a[1] = a[0];  // force dependence
    const Matrix ns = linalg::nullspace(a, cols);
    CHECK(linalg::rank(a, cols) + ns.size() == cols);
    CHECK(linalg::rank(ns, cols) == ns.size());
    for (const auto& v : ns) {
      for (const auto& y : times(a, v)) CHECK(y == 0);
    }
  }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
  const Matrix a{{1, 2}, {3, 4}};
  const auto x = linalg::solve(a, RationalVector{5, 6}, 2);
  REQUIRE(x.has_value());
  CHECK(times(a, *x) == RationalVector{5, 6});
  const Matrix singular{{1, 1}, {2, 2}};
  CHECK_FALSE(linalg::solve(singular, RationalVector{1, 3}, 2).has_value());
  CHECK(linalg::solve(singular, RationalVector{1, 2}, 2).has_value());
}

TEST_CASE("normalize_direction makes the first nonzero entry +-1") {
  const auto v = linalg::normalize_direction({0, Rational(-3, 2), 3});
  CHECK(v == RationalVector{0, -1, 2});
}

TEST_CASE("simplex on a textbook problem") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0.
  lp::LinearProgram p(2);
  p.set_all_nonnegative();
  p.add_less_equal({1, 0}, 4);
  p.add_less_equal({0, 2}, 12);
  p.add_less_equal({3, 2}, 18);
  p.maximize({3, 5});
  const auto s = p.solve();
  REQUIRE(s.optimal());
  CHECK(s.objective == 36);
  CHECK(s.x == RationalVector{2, 6});
}

TEST_CASE("simplex with free variables and equalities") {
  // min x + y with x - y = 1/3 and x + y >= -2, both free.
  lp::LinearProgram p(2);
  p.add_equal({1, -1}, Rational(1, 3));
  p.add_greater_equal({1, 1}, -2);
  p.minimize({1, 1});
  const auto s = p.solve();
  REQUIRE(s.optimal());
  CHECK(s.objective == -2);
  CHECK(s.x[0] - s.x[1] == Rational(1, 3));
}

TEST_CASE("simplex reports infeasible and unbounded problems") {
  lp::LinearProgram infeasible(1);
  infeasible.add_less_equal({1}, 0);
  infeasible.add_greater_equal({1}, 1);
  infeasible.minimize({0});
  CHECK(infeasible.solve().status == lp::Status::kInfeasible);

  lp::LinearProgram unbounded(2);
  unbounded.set_all_nonnegative();
  unbounded.add_less_equal({1, -1}, 1);
  unbounded.maximize({1, 0});
  CHECK(unbounded.solve().status == lp::Status::kUnbounded);
}
