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

#include <algorithm>
#include <random>
#include <vector>

#include "dressian/combinatorics.hpp"
#include "dressian/errors.hpp"
#include "dressian/rational.hpp"

using namespace dressian;

namespace {

// Pascal's triangle, built without calling the library.
std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : t[n][k];
}

// Lexicographic listing via std::prev_permutation on a 0/1 mask.
std::vector<std::vector<int>> lex_subsets(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i + 1);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (int n = 0; n <= 20; ++n) {
    for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == pascal(n, k));
  }
}

TEST_CASE("ranking matches an independent lexicographic listing") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto expected = lex_subsets(k, n);
      const auto listed = enumerate_ksubsets(k, n);
      REQUIRE(listed.size() == expected.size());
      for (std::size_t r = 0; r < expected.size(); ++r) {
        CHECK(listed[r].elements() == expected[r]);
        CHECK(subset_rank(expected[r], n) == r);
        CHECK(subset_unrank(r, k, n) == expected[r]);
        CHECK(listed[r].rank() == r);
      }
    }
  }
}

TEST_CASE("KSubset validates its elements") {
  CHECK_THROWS_AS(KSubset({2, 1}, 4), ParameterError);
  CHECK_THROWS_AS(KSubset({1, 1}, 4), ParameterError);
  CHECK_THROWS_AS(KSubset({0, 2}, 4), ParameterError);
  CHECK_THROWS_AS(KSubset({1, 5}, 4), ParameterError);
  const KSubset s({1, 2, 5}, 6);
  CHECK(s.to_string() == "125");
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(3));
  CHECK(KSubset({1, 2, 15}, 16).to_string() == "1,2,15");
}

TEST_CASE("weight vectors reject wrong sizes") {
  CHECK_THROWS_AS(WeightVector(2, 4, RationalVector(5)), ParameterError);
  WeightVector w(2, 4);
  CHECK(w.size() == 6);
  w.set(KSubset({2, 4}, 4), Rational(7, 3));
  CHECK(w.at(KSubset({2, 4}, 4)) == Rational(7, 3));
  CHECK(w[subset_rank(std::vector<int>{2, 4}, 4)] == Rational(7, 3));
}

TEST_CASE("lineality shift adds the coordinate sum over each subset") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 3, n = 6;
    WeightVector w(k, n);
    for (std::size_t r = 0; r < w.size(); ++r) w[r] = d(rng);
    RationalVector a(n);
    for (auto& x : a) {
      x = Rational(d(rng), 1 + (d(rng) & 3));
      x.canonicalize();
    }
    const WeightVector shifted = lineality_shift(w, a);
    const auto subsets = lex_subsets(k, n);
    for (std::size_t r = 0; r < subsets.size(); ++r) {
      Rational expected = w[r];
      for (int i : subsets[r]) expected += a[i - 1];
      CHECK(shifted[r] == expected);
    }
    // Normalization forgets exactly the lineality part.
    CHECK(normalize(shifted) == normalize(w));
    for (auto anchor : normalization_anchors(k, n)) {
      CHECK(normalize(w)[anchor] == 0);
    }
  }
}

TEST_CASE("relabelling composes and inverts") {
  WeightVector w(2, 5);
  for (std::size_t r = 0; r < w.size(); ++r) w[r] = static_cast<int>(r * r);
  const std::vector<int> id{1, 2, 3, 4, 5};
  CHECK(relabel(w, id) == w);
  const std::vector<int> sigma{2, 3, 4, 5, 1};
  const std::vector<int> inverse{5, 1, 2, 3, 4};
  CHECK(relabel(relabel(w, sigma), inverse) == w);
  // (sigma . w)(sigma(S)) = w(S) on a specific subset.
  const WeightVector moved = relabel(w, sigma);
  CHECK(moved.at(std::vector<int>{2, 3}) == w.at(std::vector<int>{1, 2}));
  CHECK(moved.at(std::vector<int>{1, 2}) == w.at(std::vector<int>{1, 5}));
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  for (const char* bad : {"", "1.5", "1e3", "1/0", "--1", "abc", "1/", "/2"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}
