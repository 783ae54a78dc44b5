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
#include <set>
#include <string>
#include <vector>

#include "dressian/arrangement.hpp"
#include "dressian/errors.hpp"
#include "dressian/fixtures.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

using namespace dressian;

namespace {

std::set<std::string> split_strings(const MetricTree& t) {
  std::set<std::string> out;
  for (const auto& s : splits_of_tree(t)) out.insert(s.to_string());
  return out;
}

MetricTree star(const std::vector<int>& leaves, const Rational& length = 1) {
  MetricTree t;
  const int c = t.add_internal();
  for (int x : leaves) t.add_edge(c, t.add_leaf(x), length);
  return t;
}

TreeArrangement stars(int n, const Rational& length) {
  std::vector<MetricTree> trees;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> leaves;
    for (int j = 1; j <= n; ++j) if (j != i) leaves.push_back(j);
    trees.push_back(star(leaves, length));
  }
  return make_arrangement(3, n, std::move(trees));
}

// Test-side distance compatibility: delta_i(j, l) = delta_j(i, l) for all
// distinct i, j, l.
bool compatible_by_hand(const TreeArrangement& t) {
  std::vector<Dissimilarity> d;
  for (const auto& tree : t.trees) d.push_back(tree_metric(tree));
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j)
      for (int l = 1; l <= t.n; ++l) {
        if (i == j || j == l || i == l) continue;
        if (d[i - 1].at(j, l) != d[j - 1].at(i, l)) return false;
      }
  return true;
}

// The metrized arrangement of a fixture class.
TreeArrangement metrized(int id) {
  auto m = metrize_abstract_arrangement(fixtures::cone_class_arrangement(id));
  REQUIRE(m.has_value());
  return *m;
}

}  // namespace

TEST_CASE("a k = 2 arrangement is a single tree") {
  const auto t = arrangement_from_weight(fixtures::dr25_weight());
  CHECK(t.k == 2);
  REQUIRE(t.trees.size() == 1);
  CHECK(t.indices[0].empty());
  CHECK(split_strings(t.trees[0]) == std::set<std::string>{"12|345", "123|45"});
}

TEST_CASE("half-length stars give the constant weight -1") {
  const auto w = weight_from_arrangement(stars(5, Rational(1, 2)));
  CHECK(w.k() == 3);
  for (std::size_t r = 0; r < w.size(); ++r) CHECK(w[r] == -1);
  CHECK(is_in_dressian(w).member);
}

TEST_CASE("incompatible arrangements are rejected") {
  auto t = stars(4, 1);
  t.trees[0].edge(0).length = 2;
  CHECK_FALSE(compatible_by_hand(t));
  const auto report = check_compatibility(t);
  CHECK_FALSE(report.compatible);
  REQUIRE(report.violation.has_value());
  CHECK(report.violation->distance1 != report.violation->distance2);
  CHECK(report.violation->subset.size() == 3);
  CHECK_FALSE(report.violation->describe().empty());
  CHECK_THROWS_AS(weight_from_arrangement(t), CompatibilityError);
}

TEST_CASE("leaf sets are validated") {
  std::vector<MetricTree> trees{star({2, 3, 4}), star({1, 3, 4}), star({1, 2, 4}),
                                star({1, 2, 3, 4})};
  CHECK_THROWS_AS(make_arrangement(3, 4, trees), ParameterError);
  trees.pop_back();
  CHECK_THROWS_AS(make_arrangement(3, 4, trees), ParameterError);
}

TEST_CASE("weights and arrangements round trip") {
  for (int id = 0; id < 7; ++id) {
    const auto t = metrized(id);
    CHECK(compatible_by_hand(t));
    const WeightVector w = weight_from_arrangement(t);
    CHECK(is_in_dressian(w).member);
    const auto back = arrangement_from_weight(w);
    CHECK(generalized_whitehead_diff(back, t).relation ==
          ArrangementRelation::kIdentical);
    // The tree at index i is dual to the subdivision of the facet x_i = 1.
    for (int i = 1; i <= 6; ++i) {
      std::vector<std::pair<int, int>> down;
      for (int x = 1; x <= 6; ++x) if (x != i) down.push_back({x, x > i ? x - 1 : x});
      const auto relabelled = relabel_leaves(back.tree({i}), down);
      CHECK(cells_from_tree(relabelled).same_cells(
          regular_subdivision(contraction_restriction(w, i))));
    }
  }
  WeightVector bad(3, 6);
  bad[0] = 1;
  bad[19] = -3;
  bad[7] = 2;
  if (!is_in_dressian(bad).member) {
    CHECK_THROWS_AS(arrangement_from_weight(bad), MembershipError);
  }
}

TEST_CASE("abstract arrangements") {
  CHECK(is_abstract_arrangement(stars(4, 1)));
  CHECK(is_abstract_arrangement(stars(6, 1)));
  for (int id = 0; id < 7; ++id) {
    CHECK(is_abstract_arrangement(fixtures::cone_class_arrangement(id)));
  }
  // The deletions of one five-leaf tree form an arrangement.
  const MetricTree big = caterpillar({1, 2}, {3}, {4, 5});
  std::vector<MetricTree> deletions;
  for (int i = 1; i <= 5; ++i) deletions.push_back(delete_leaf(big, i));
  const auto family = make_arrangement(3, 5, deletions);
  CHECK(is_abstract_arrangement(family));
  // Changing one quartet breaks it.
  auto broken = family;
  broken.trees[0] = parse_newick("(2,4,(3,5));").tree;
  CHECK_FALSE(is_abstract_arrangement(broken));
  CHECK_THROWS_AS(is_abstract_arrangement(TreeArrangement{3, 3, {}, {}}), ParameterError);
}

TEST_CASE("metrization") {
  const auto single = arrangement_from_weight(fixtures::dr25_weight());
  const auto m = metrize_abstract_arrangement(single);
  REQUIRE(m.has_value());
  for (int e = 0; e < m->trees[0].num_edges(); ++e) {
    CHECK(m->trees[0].edge(e).length == 1);
  }
  for (int id = 0; id < 7; ++id) {
    const auto t = metrized(id);
    CHECK(compatible_by_hand(t));
    for (const auto& tree : t.trees) {
      for (int e = 0; e < tree.num_edges(); ++e) CHECK(tree.edge(e).length >= 1);
    }
  }
}

TEST_CASE("a family that is not an arrangement has no metrization") {
  const char* newick[] = {"(2,((3,4),6),5);", "(1,(3,(4,6)),5);", "(1,(2,(4,5)),6);",
                          "(1,(2,6),(3,5));", "(1,2,((3,4),6));", "(1,((2,4),5),3);"};
  std::vector<MetricTree> trees;
  for (const char* text : newick) trees.push_back(parse_newick(text).tree);
  const auto family = make_arrangement(3, 6, trees);
  CHECK_FALSE(is_abstract_arrangement(family));
  CHECK_FALSE(metrize_abstract_arrangement(family).has_value());
}

TEST_CASE("cherries of arrangements") {
  CHECK(arrangement_cherries(stars(6, 1)).empty());
  for (const auto& cls : fixtures::dr36_cone_classes()) {
    std::vector<std::string> got;
    for (const auto& s : arrangement_cherries(fixtures::cone_class_arrangement(cls.id))) {
      got.push_back(s.to_string());
    }
    auto expected = cls.cherries;
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}

TEST_CASE("recursive contraction reproduces the arrangement for k = 3") {
  const WeightVector w = weight_from_arrangement(metrized(5));
  const auto family = recursive_contraction_arrangement(w);
  const auto direct = arrangement_from_weight(w);
  REQUIRE(family.tuples.size() == 6);
  for (std::size_t i = 0; i < family.tuples.size(); ++i) {
    CHECK(split_strings(family.trees[i]) == split_strings(direct.trees[i]));
  }
}

TEST_CASE("recursive contraction over ordered pairs for k = 4") {
  const auto family = recursive_contraction_arrangement(fixtures::delta48_weight());
  CHECK(family.tuples.size() == 56);
  const auto direct = arrangement_from_weight(fixtures::delta48_weight());
  for (std::size_t i = 0; i < family.tuples.size(); ++i) {
    auto index = family.tuples[i];
    std::sort(index.begin(), index.end());
    CHECK(split_strings(family.trees[i]) == split_strings(direct.tree(index)));
  }
}

TEST_CASE("generalized Whitehead comparison") {
  const auto a = fixtures::cone_class_arrangement(5);
  CHECK(generalized_whitehead_diff(a, a).relation == ArrangementRelation::kIdentical);
  auto b = a;
  b.trees[0] = whitehead_move(b.trees[0], splits_of_tree(b.trees[0])[0], 0);
  const auto diff = generalized_whitehead_diff(a, b);
  CHECK(diff.relation == ArrangementRelation::kGeneralizedWhitehead);
  CHECK(diff.differing == std::vector<std::vector<int>>{{1}});
  auto c = b;
  const auto first = splits_of_tree(c.trees[0])[0];
  c.trees[0] = whitehead_move(c.trees[0], first, 1);
  if (!is_whitehead_related(a.trees[0], c.trees[0]) &&
      split_strings(a.trees[0]) != split_strings(c.trees[0])) {
    CHECK(generalized_whitehead_diff(a, c).relation == ArrangementRelation::kFarther);
  }
  CHECK(relation_name(ArrangementRelation::kGeneralizedWhitehead) == "generalized-Whitehead");
  CHECK_THROWS_AS(generalized_whitehead_diff(a, stars(5, 1)), ParameterError);
}

TEST_CASE("relabelling commutes with the weight map") {
  const auto t = metrized(3);
  const std::vector<int> sigma{3, 1, 2, 6, 4, 5};
  CHECK(weight_from_arrangement(relabel_arrangement(t, sigma)) ==
        relabel(weight_from_arrangement(t), sigma));
}
