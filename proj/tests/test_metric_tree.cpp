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

#include <set>
#include <string>
#include <vector>

#include "dressian/errors.hpp"
#include "dressian/metric_tree.hpp"

using namespace dressian;

namespace {

std::set<std::string> split_strings(const MetricTree& t) {
  std::set<std::string> out;
  for (const auto& s : splits_of_tree(t)) out.insert(s.to_string());
  return out;
}

// Distances by breadth-first search, independent of tree_metric.
Rational path_length(const MetricTree& t, int from_label, int to_label) {
  const int start = t.leaf_vertex(from_label), goal = t.leaf_vertex(to_label);
  std::vector<Rational> dist(t.num_vertices());
  std::vector<bool> seen(t.num_vertices(), false);
  std::vector<int> queue{start};
  seen[start] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int v = queue[q];
    for (int e : t.incident(v)) {
      const int u = t.other_end(e, v);
      if (seen[u]) continue;
      seen[u] = true;
      dist[u] = dist[v] + t.edge(e).length;
      queue.push_back(u);
    }
  }
  return dist[goal];
}

// (2m - 5)!!
long double_factorial_count(int m) {
  long r = 1;
  for (int x = 2 * m - 5; x > 1; x -= 2) r *= x;
  return r;
}

}  // namespace

TEST_CASE("tree metric equals path lengths") {
  const MetricTree t = caterpillar({1, 2}, {3, 6}, {4, 5}, Rational(1, 2), 2);
  const Dissimilarity d = tree_metric(t);
  for (int i : t.leaves()) {
    for (int j : t.leaves()) CHECK(d.at(i, j) == path_length(t, i, j));
  }
  CHECK(d.at(1, 2) == 4);
  CHECK(d.at(1, 5) == Rational(11, 2));
  CHECK(is_tree_metric(d));
}

TEST_CASE("four-point violations are reported") {
  Dissimilarity d({1, 2, 3, 4});
  d.set(1, 2, 1); d.set(3, 4, 1);
  d.set(1, 3, 2); d.set(2, 4, 2);
  d.set(1, 4, 3); d.set(2, 3, 3);
  const auto v = four_point_violation(d);
  REQUIRE(v.has_value());
  CHECK(*v == std::array<int, 4>{1, 2, 3, 4});
  CHECK_THROWS_AS(reconstruct_tree(d), ReconstructionError);
}

TEST_CASE("reconstruction inverts the tree metric") {
  for (const auto& t : enumerate_trivalent_topologies({1, 2, 3, 4, 5, 6})) {
    MetricTree weighted = t;
    for (int e = 0; e < weighted.num_edges(); ++e) {
      weighted.edge(e).length = Rational(e + 1, 3);
      weighted.edge(e).length.canonicalize();
    }
    const MetricTree back = reconstruct_tree(tree_metric(weighted));
    CHECK(labelled_isomorphic(back, weighted, true));
  }
}

TEST_CASE("zero internal edges are contracted") {
  const std::vector<int> leaves{1, 2, 3, 4, 5};
  const MetricTree t = tree_from_splits(
      leaves, {make_split({1, 2}, leaves, 0), make_split({4, 5}, leaves, 3)});
  CHECK(split_strings(reconstruct_tree(tree_metric(t))) ==
        std::set<std::string>{"123|45"});
}

TEST_CASE("negative pendant lengths are not tree metrics") {
  Dissimilarity d({1, 2, 3});
  d.set(1, 2, 1); d.set(1, 3, 1); d.set(2, 3, 5);
  CHECK_THROWS_AS(reconstruct_tree(d), ReconstructionError);
}

TEST_CASE("splits and tree_from_splits agree") {
  const MetricTree t = caterpillar({1, 2}, {3}, {4, 5});
  CHECK(split_strings(t) == std::set<std::string>{"12|345", "123|45"});
  const auto rebuilt = tree_from_splits(t.leaves(), splits_of_tree(t));
  CHECK(labelled_isomorphic(rebuilt, t, true));
}

TEST_CASE("Whitehead moves across the edge 12|345") {
  const MetricTree t = caterpillar({1, 2}, {3}, {4, 5});
  const Split e = make_split({1, 2}, t.leaves());
  CHECK(split_strings(whitehead_move(t, e, 0)) ==
        std::set<std::string>{"123|45", "13|245"});
  CHECK(split_strings(whitehead_move(t, e, 1)) ==
        std::set<std::string>{"123|45", "145|23"});
  CHECK(is_whitehead_related(t, whitehead_move(t, e, 0)));
  CHECK_FALSE(is_whitehead_related(t, t));
}

TEST_CASE("every trivalent tree has 2(m-3) distinct Whitehead neighbours") {
  const std::vector<int> leaves{1, 2, 3, 4, 5, 6};
  const auto all = enumerate_trivalent_topologies(leaves);
  for (const auto& t : all) {
    std::set<std::set<std::string>> neighbours;
    for (int e = 0; e < t.num_edges(); ++e) {
      if (!t.is_internal_edge(e)) continue;
      for (int c = 0; c < 2; ++c) neighbours.insert(split_strings(whitehead_move(t, e, c)));
    }
    CHECK(neighbours.size() == 6);
    int related = 0;
    for (const auto& u : all) related += is_whitehead_related(t, u) ? 1 : 0;
    CHECK(related == 6);
  }
}

TEST_CASE("topology counts") {
  for (int m = 4; m <= 7; ++m) {
    std::vector<int> leaves;
    for (int i = 1; i <= m; ++i) leaves.push_back(i);
    CHECK(static_cast<long>(enumerate_trivalent_topologies(leaves).size()) ==
          double_factorial_count(m));
  }
  // All phylogenetic trees: 4, 26, 236 on 4, 5, 6 leaves.
  CHECK(enumerate_topologies({1, 2, 3, 4}).size() == 4);
  CHECK(enumerate_topologies({1, 2, 3, 4, 5}).size() == 26);
  CHECK(enumerate_topologies({1, 2, 3, 4, 5, 6}).size() == 236);
}

TEST_CASE("cherries and leaf deletion") {
  const MetricTree t = caterpillar({1, 2}, {3}, {4, 5});
  CHECK(cherries_of_tree(t) == std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
  const MetricTree quartet = delete_leaf(t, 3);
  CHECK(split_strings(quartet) == std::set<std::string>{"12|45"});
  CHECK(tree_metric(quartet).at(1, 4) == 4);
  const auto star = parse_newick("(1,2,3,4);").tree;
  CHECK(cherries_of_tree(star).empty());
  CHECK_THROWS_AS(delete_leaf(t, 9), ParameterError);
}

TEST_CASE("relabelling leaves") {
  const MetricTree t = caterpillar({1, 2}, {3}, {4, 5});
  const auto r = relabel_leaves(t, {{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}});
  CHECK(split_strings(r) == std::set<std::string>{"12|345", "123|45"});
}

TEST_CASE("Newick round trip") {
  for (const auto& t : enumerate_topologies({1, 2, 3, 4, 5, 6})) {
    MetricTree weighted = t;
    for (int e = 0; e < weighted.num_edges(); ++e) {
      weighted.edge(e).length = Rational(2 * e + 1, 2);
      weighted.edge(e).length.canonicalize();
    }
    const auto parsed = parse_newick(to_newick(weighted));
    CHECK(parsed.has_lengths);
    CHECK(labelled_isomorphic(parsed.tree, weighted, true));
    CHECK(to_newick(parsed.tree) == to_newick(weighted));
  }
  const auto rooted = parse_newick("((1,2),(3,4));");
  CHECK_FALSE(rooted.has_lengths);
  CHECK(split_strings(rooted.tree) == std::set<std::string>{"12|34"});
  CHECK(tree_metric(rooted.tree).at(1, 3) == 4);
}

TEST_CASE("Newick errors") {
  for (const char* bad : {"(1,2,3)", "(1:1,2,3:1);", "(1:-1,2:1,3:1);",
                          "(1,2,x);", "(1,1,2);", "((1,2)a,3,4);", ""}) {
    CHECK_THROWS_AS(parse_newick(bad), ParseError);
  }
}
