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


#ifndef DRESSIAN_ARRANGEMENT_HPP_
#define DRESSIAN_ARRANGEMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dressian/combinatorics.hpp"
#include "dressian/metric_tree.hpp"

namespace dressian {

// A family of trees T_J indexed by the (k-2)-subsets J of [n] in lex order,
// where T_J has leaf set [n] \ J. For k = 3 this is the classical
// arrangement of n trees T_1, ..., T_n.
//
// The same type carries abstract arrangements: code that only looks at
// topologies ignores the edge lengths.
struct TreeArrangement {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> indices;
  std::vector<MetricTree> trees;

  const MetricTree& tree(const std::vector<int>& index) const;
  std::size_t position(const std::vector<int>& index) const;
};
using AbstractArrangement = TreeArrangement;

// Validates the index structure and leaf sets. `trees` must follow the lex
// order of the (k-2)-subsets.
TreeArrangement make_arrangement(int k, int n, std::vector<MetricTree> trees);

// Tree per index built from the Dressian point w: with M = max w and
// m = min w, the distance of i, j in T_J is
//   1 + (M + 1 - w(J u ij)) / (M - m + 2),
// which lies in (1, 2) and is therefore a metric. Throws MembershipError
// when w is not in the Dressian.
TreeArrangement arrangement_from_weight(const WeightVector& w);

struct CompatibilityViolation {
  std::vector<int> subset;  // K = J u {i, j} = J' u {i', j'}
  std::vector<int> index1;
  std::pair<int, int> pair1;
  Rational distance1;
  std::vector<int> index2;
  std::pair<int, int> pair2;
  Rational distance2;

  std::string describe() const;
};

struct CompatibilityReport {
  bool compatible = true;
  std::optional<CompatibilityViolation> violation;
};

CompatibilityReport check_compatibility(const TreeArrangement& t);

// w(K) = -delta_J(i, j) for any partition K = J u {i, j}. The negation is
// the bridge between tree metrics (max convention) and the min-convention
// Dressian. Throws CompatibilityError.
WeightVector weight_from_arrangement(const TreeArrangement& t);

// The recursive check for k = 3: n = 4 always holds, n = 5 asks for a
// single five-leaf tree whose leaf deletions give every T_i, and n >= 6
// recurses on every deletion. Throws ParameterError for n < 4.
bool is_abstract_arrangement(const AbstractArrangement& t);

// Edge lengths minimizing the total length subject to every edge having
// length at least 1 and all compatibility equalities; ties are broken by
// minimizing the edges one after another in (tree, edge id) order.
// Returns nullopt when no metrization exists.
std::optional<TreeArrangement> metrize_abstract_arrangement(
    const AbstractArrangement& t);

// k-subsets I such that every partition I = J u {i, j} makes i, j a cherry
// of T_J. Sorted.
std::vector<KSubset> arrangement_cherries(const TreeArrangement& t);

// Trees indexed by ordered tuples of k-2 distinct contractions, each built
// by contracting one label at a time and reading the final Delta(2, .)
// weight with the normalization of arrangement_from_weight.
struct OrderedTreeFamily {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> tuples;  // lex order
  std::vector<MetricTree> trees;
};

OrderedTreeFamily recursive_contraction_arrangement(const WeightVector& w);

enum class ArrangementRelation { kIdentical, kGeneralizedWhitehead, kFarther };

struct WhiteheadDiff {
  ArrangementRelation relation = ArrangementRelation::kIdentical;
  // Indices whose topologies differ.
  std::vector<std::vector<int>> differing;
};

// Compares topologies index by index. Throws ParameterError when the two
// families have different (k, n).
WhiteheadDiff generalized_whitehead_diff(const TreeArrangement& a,
                                         const TreeArrangement& b);

std::string relation_name(ArrangementRelation r);

// Applies sigma (sigma[i-1] is the image of i) to every index and leaf.
TreeArrangement relabel_arrangement(const TreeArrangement& t,
                                    const std::vector<int>& sigma);

}  // namespace dressian

#endif  // DRESSIAN_ARRANGEMENT_HPP_
