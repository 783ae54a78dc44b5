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
#include <set>
#include <vector>

#include "dressian/errors.hpp"
#include "dressian/fixtures.hpp"
#include "dressian/linalg.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

using namespace dressian;

namespace {

using Family = std::set<std::vector<int>>;

Family family_of(const Cell& c) {
  Family f;
  for (const auto& b : c.bases) f.insert(b.elements());
  return f;
}

std::set<Family> families(const std::vector<Cell>& cells) {
  std::set<Family> out;
  for (const auto& c : cells) out.insert(family_of(c));
  return out;
}

// Maximal cells by brute force: every vertex of {c : e_S . c <= w(S)} is
// the solution of n linearly independent tight rows, and its tight set is a
// maximal cell.
std::set<Family> brute_force_cells(const WeightVector& w) {
  const int n = w.n();
  const auto subsets = enumerate_ksubsets(w.k(), n);
  const std::size_t m = subsets.size();
  linalg::Matrix rows;
  for (const auto& s : subsets) {
    RationalVector row(n);
    for (int i : s.elements()) row[i - 1] = 1;
    rows.push_back(row);
  }
  std::set<Family> cells;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    linalg::Matrix a;
    RationalVector b;
    for (std::size_t r = 0; r < m; ++r) {
      if (pick[r]) { a.push_back(rows[r]); b.push_back(w[r]); }
    }
    if (linalg::rank(a, n) < static_cast<std::size_t>(n)) continue;
    const auto c = linalg::solve(a, b, n);
    REQUIRE(c.has_value());
    Family tight;
    bool feasible = true;
    for (std::size_t r = 0; r < m && feasible; ++r) {
      const Rational v = linalg::dot(rows[r], *c);
      if (v > w[r]) feasible = false;
      if (v == w[r]) tight.insert(subsets[r].elements());
    }
    if (feasible) cells.insert(tight);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return cells;
}

// Basis exchange on plain sets, written without the library.
bool exchange_holds(const Family& bases) {
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      for (int x : b1) {
        if (std::find(b2.begin(), b2.end(), x) != b2.end()) continue;
        bool found = false;
        for (int y : b2) {
          if (std::find(b1.begin(), b1.end(), y) != b1.end()) continue;
          std::vector<int> swapped;
          for (int z : b1) if (z != x) swapped.push_back(z);
          swapped.push_back(y);
          std::sort(swapped.begin(), swapped.end());
          if (bases.count(swapped)) { found = true; break; }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

WeightVector random_weight(int k, int n, std::mt19937& rng, int spread) {
  std::uniform_int_distribution<int> d(0, spread);
  WeightVector w(k, n);
  for (std::size_t r = 0; r < w.size(); ++r) w[r] = d(rng);
  return w;
}

}  // namespace

TEST_CASE("hypersimplex parameters") {
  CHECK_THROWS_AS(Hypersimplex(0, 4), ParameterError);
  CHECK_THROWS_AS(Hypersimplex(4, 4), ParameterError);
  CHECK(Hypersimplex(2, 5).vertices().size() == 10);
}

TEST_CASE("the zero weight gives the trivial subdivision") {
  const auto s = regular_subdivision(WeightVector(3, 6));
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].size() == 20);
  CHECK(is_matroidal(s));
}

TEST_CASE("regular subdivisions agree with a brute-force lower hull") {
  std::mt19937 rng(11);
  const std::vector<std::pair<int, int>> shapes{{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}};
  for (auto [k, n] : shapes) {
    const int trials = n == 6 ? 4 : 25;
    for (int t = 0; t < trials; ++t) {
      const WeightVector w = random_weight(k, n, rng, 3);
      const auto s = regular_subdivision(w);
      CHECK(families(s.cells) == brute_force_cells(w));
    }
  }
}

TEST_CASE("subdivisions ignore the lineality space") {
  std::mt19937 rng(5);
  const WeightVector w = random_weight(3, 6, rng, 4);
  const auto shifted = lineality_shift(w, {1, -2, Rational(1, 3), 0, 5, 7});
  CHECK(regular_subdivision(w).same_cells(regular_subdivision(shifted)));
}

TEST_CASE("matroid cells agree with an independent exchange check") {
  std::mt19937 rng(17);
  const auto all = enumerate_ksubsets(3, 6);
  for (int t = 0; t < 300; ++t) {
    std::vector<KSubset> bases;
    for (const auto& s : all) {
      if (rng() % 3 != 0) bases.push_back(s);
    }
    if (bases.empty()) continue;
    const Cell c = make_cell(3, 6, bases);
    CHECK(is_matroid_cell(c) == exchange_holds(family_of(c)));
  }
  CHECK_FALSE(is_matroid_cell(make_cell(2, 4, std::vector<std::vector<int>>{{1, 2}, {3, 4}})));
  CHECK(is_matroid_cell(make_cell(2, 4, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}})));
}

TEST_CASE("matroidal subdivisions are exactly the Dressian ones") {
  std::mt19937 rng(23);
  int members = 0;
  for (int t = 0; t < 80; ++t) {
    const WeightVector w = random_weight(2, 5, rng, 2);
    const bool member = is_in_dressian(w).member;
    members += member ? 1 : 0;
    CHECK(is_matroidal(regular_subdivision(w)) == member);
  }
  CHECK(members > 0);
}

TEST_CASE("the split of Delta(2,5) along 12|345") {
  const auto h = make_hypersimplex_split(2, 5, {1, 2}, 1);
  CHECK(h.b == std::vector<int>{3, 4, 5});
  const auto [first, second] = split_subdivision(h);
  // At least one element in {1,2}, and at most one.
  CHECK(first.size() == 7);
  CHECK(second.size() == 9);
  CHECK(first.contains(KSubset({1, 2}, 5)));
  CHECK(second.contains(KSubset({3, 4}, 5)));
  CHECK_THROWS_AS(make_hypersimplex_split(2, 5, {1, 2}, 3), ParameterError);
  CHECK_THROWS_AS(split_subdivision(make_hypersimplex_split(2, 5, {1}, 1)),
                  ParameterError);
}

TEST_CASE("split compatibility") {
  const auto a = make_hypersimplex_split(2, 5, {1, 2}, 1);
  const auto b = make_hypersimplex_split(2, 5, {4, 5}, 1);
  const auto c = make_hypersimplex_split(2, 5, {1, 3}, 1);
  CHECK(splits_compatible(a, b));
  CHECK(splits_compatible(a, a));
  // The point (1/2, 1/2, 1/2, 1/4, 1/4) lies in the open hypersimplex on
  // both hyperplanes x1 + x2 = 1 and x1 + x3 = 1.
  CHECK_FALSE(splits_compatible(a, c));
  CHECK_THROWS_AS(common_refinement(2, 5, {a, c}), CompatibilityError);
}

TEST_CASE("the Dr(2,5) caterpillar example") {
  const auto expected = families(fixtures::dr25_cells());
  CHECK(expected.size() == 3);
  CHECK(families(common_refinement(2, 5, fixtures::dr25_splits()).cells) == expected);
  CHECK(families(regular_subdivision(fixtures::dr25_weight()).cells) == expected);
  CHECK(families(cells_from_tree(fixtures::dr25_tree()).cells) == expected);
  for (const auto& s : splits_of_tree(fixtures::dr25_tree())) {
    const auto h = split_of_tree_edge(s, 5);
    CHECK(h.mu == 1);
  }
}

TEST_CASE("cells of a tree") {
  const auto star = cells_from_tree(parse_newick("(1,2,3,4,5);").tree);
  REQUIRE(star.cells.size() == 1);
  CHECK(star.cells[0].size() == 10);
  CHECK_THROWS_AS(cells_from_tree(parse_newick("(1,2,7);").tree), ParameterError);
}

TEST_CASE("facet restrictions read the right coordinates") {
  std::mt19937 rng(29);
  const WeightVector w = random_weight(3, 6, rng, 9);
  const WeightVector con = contraction_restriction(w, 2);
  const WeightVector del = deletion_restriction(w, 2);
  CHECK(con.k() == 2);
  CHECK(con.n() == 5);
  CHECK(del.k() == 3);
  CHECK(del.n() == 5);
  auto lift = [](std::vector<int> s) {
    for (auto& x : s) if (x >= 2) ++x;
    return s;
  };
  for (const auto& s : enumerate_ksubsets(2, 5)) {
    auto up = lift(s.elements());
    up.push_back(2);
    std::sort(up.begin(), up.end());
    CHECK(con.at(s) == w.at(up));
  }
  for (const auto& s : enumerate_ksubsets(3, 5)) CHECK(del.at(s) == w.at(lift(s.elements())));
  CHECK_THROWS_AS(contraction_restriction(w, 7), ParameterError);
  CHECK(fixtures::delta48_contraction() ==
        contraction_restriction(fixtures::delta48_weight(), 1));
}

TEST_CASE("contracting cells gives the subdivision of the facet") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    const WeightVector w = random_weight(3, 6, rng, 3);
    const auto s = regular_subdivision(w);
    for (int i = 1; i <= 6; ++i) {
      std::vector<Cell> contracted;
      for (const auto& c : s.cells) contracted.push_back(contract_cell(c, i));
      const auto facet = regular_subdivision(contraction_restriction(w, i));
      CHECK(families(maximal_full_cells(contracted)) == families(facet.cells));
    }
  }
}
