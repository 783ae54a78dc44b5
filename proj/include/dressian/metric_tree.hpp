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

#ifndef DRESSIAN_METRIC_TREE_HPP_
#define DRESSIAN_METRIC_TREE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dressian/rational.hpp"

namespace dressian {

// Leaf-labelled tree with nonnegative rational edge lengths. Degree-one
// vertices carry positive integer labels; internal vertices have label 0
// and degree at least three. A two-leaf tree is a single edge.
class MetricTree {
 public:
  struct Edge {
    int u;
    int v;
    Rational length;
  };

  int add_leaf(int label);
  int add_internal();
  int add_edge(int u, int v, Rational length);

  // Throws ParameterError when any structural invariant fails.
  void validate() const;

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int label(int vertex) const { return labels_[vertex]; }
  bool is_leaf(int vertex) const { return labels_[vertex] != 0; }
  int degree(int vertex) const {
    return static_cast<int>(incident_[vertex].size());
  }
  const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }
  const Edge& edge(int e) const { return edges_[e]; }
  Edge& edge(int e) { return edges_[e]; }
  int other_end(int e, int vertex) const {
    return edges_[e].u == vertex ? edges_[e].v : edges_[e].u;
  }

  std::vector<int> leaves() const;  // sorted labels
  int leaf_vertex(int label) const;  // throws ParameterError
  bool has_leaf(int label) const;
  bool is_internal_edge(int e) const;
  bool is_trivalent() const;

  // Sorted leaf labels in the component of T - e that does not contain the
  // endpoint `from`.
  std::vector<int> leaves_beyond(int e, int from) const;

  // Re-attach edge `e` so that endpoint `old_end` becomes `new_end`.
  void move_edge_end(int e, int old_end, int new_end);

 private:
  std::vector<int> labels_;
  std::vector<std::vector<int>> incident_;
  std::vector<Edge> edges_;
};

// Symmetric pairwise dissimilarity on a label set.
class Dissimilarity {
 public:
  explicit Dissimilarity(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t index_of(int label) const;
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);

  friend bool operator==(const Dissimilarity&, const Dissimilarity&) = default;

 private:
  std::vector<int> labels_;
  RationalVector values_;
};

// Bipartition of the leaf set; `a` holds the minimum label.
struct Split {
  std::vector<int> a;
  std::vector<int> b;
  Rational weight;

  bool trivial() const { return a.size() == 1 || b.size() == 1; }
  std::string to_string() const;  // "12|345"
  bool same_bipartition(const Split& other) const { return a == other.a; }
};

Split make_split(std::vector<int> side, const std::vector<int>& leaves,
                 Rational weight = 0);

Dissimilarity tree_metric(const MetricTree& tree);

// Four-point condition in the max convention. Returns the first quartet
// whose three pair sums have a unique maximum.
std::optional<std::array<int, 4>> four_point_violation(const Dissimilarity& d);
bool is_tree_metric(const Dissimilarity& d);

// Exact inverse of tree_metric: internal edges of length zero are
// contracted. Throws ReconstructionError.
MetricTree reconstruct_tree(const Dissimilarity& d);

// One split per internal edge, weight = edge length, sorted by side a.
std::vector<Split> splits_of_tree(const MetricTree& tree);

// Builds the tree of a pairwise compatible split system. `pendant` gives
// the leaf edge length per label (defaults to 1).
MetricTree tree_from_splits(const std::vector<int>& leaves,
                            const std::vector<Split>& internal,
                            const std::vector<Rational>& pendant = {});

// Nearest-neighbor interchange across the internal edge with the given
// split. With subtrees a, b on the side of the minimum label and c, d on
// the other (each pair ordered by minimum leaf), choice 0 yields ac|bd and
// choice 1 yields ad|bc. The new edge keeps the old length.
MetricTree whitehead_move(const MetricTree& tree, const Split& edge, int choice);
MetricTree whitehead_move(const MetricTree& tree, int edge, int choice);

bool is_whitehead_related(const MetricTree& t1, const MetricTree& t2);

// Same leaf set and split system; with `metric`, equal lengths on every
// edge including the pendant ones.
bool labelled_isomorphic(const MetricTree& t1, const MetricTree& t2,
                         bool metric = false);

// Pairs of leaves adjacent to a common internal vertex of degree three.
std::vector<std::pair<int, int>> cherries_of_tree(const MetricTree& tree);

// Removes a leaf and suppresses a resulting degree-two vertex by adding the
// two merged edge lengths.
MetricTree delete_leaf(const MetricTree& tree, int label);

// C(ab, c..., de): cherries {a,b} and {d,e} joined by a spine carrying the
// middle leaves in order.
MetricTree caterpillar(std::pair<int, int> first, const std::vector<int>& middle,
                       std::pair<int, int> last, const Rational& internal = 1,
                       const Rational& pendant = 1);

// Applies label -> mapping[label] to every leaf.
MetricTree relabel_leaves(const MetricTree& tree,
                          const std::vector<std::pair<int, int>>& mapping);

// Every trivalent topology on the given leaves (unit lengths).
std::vector<MetricTree> enumerate_trivalent_topologies(
    const std::vector<int>& leaves);

// Every topology (trivalent or not) on the given leaves; small leaf sets.
std::vector<MetricTree> enumerate_topologies(const std::vector<int>& leaves);

// Newick text rooted at the internal vertex next to the smallest leaf, with
// children ordered by their smallest descendant leaf.
std::string to_newick(const MetricTree& tree, bool with_lengths = true);

struct ParsedNewick {
  MetricTree tree;
  bool has_lengths = false;
};

// Accepts integer leaf labels and "p/q" branch lengths; missing lengths
// default to 1. Degree-two vertices (e.g. a binary root) are suppressed.
ParsedNewick parse_newick(std::string_view text);

}  // namespace dressian

#endif  // DRESSIAN_METRIC_TREE_HPP_
