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


#ifndef DRESSIAN_SUBDIVISION_HPP_
#define DRESSIAN_SUBDIVISION_HPP_

#include <optional>
#include <vector>

#include "dressian/combinatorics.hpp"
#include "dressian/metric_tree.hpp"

// Regular subdivisions of the hypersimplex Delta(k, n) and the operations
// that build or compare them. Only maximal cells are ever stored; a cell is
// identified with its vertex set, i.e. a family of k-subsets.
namespace dressian {

struct Hypersimplex {
  int k;
  int n;

  Hypersimplex(int k, int n);
  std::vector<KSubset> vertices() const { return enumerate_ksubsets(k, n); }
};

struct Cell {
  int k = 0;
  int n = 0;
  std::vector<KSubset> bases;  // sorted, duplicate free

  std::size_t size() const { return bases.size(); }
  bool contains(const KSubset& s) const;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& x, const Cell& y) { return x.bases <=> y.bases; }
};

// Builds a sorted cell; all subsets must have size k inside [n].
Cell make_cell(int k, int n, std::vector<KSubset> bases);
Cell make_cell(int k, int n, const std::vector<std::vector<int>>& bases);

struct Subdivision {
  int k = 0;
  int n = 0;
  std::vector<Cell> cells;  // maximal cells, sorted
  std::optional<WeightVector> weight;

  // Compares the cell families only.
  bool same_cells(const Subdivision& other) const {
    return k == other.k && n == other.n && cells == other.cells;
  }
};

// Lower-hull subdivision of the lifted vertex set (vertex e_S at height
// w(S)). The maximal cells are the tight sets of the vertices of
// {c in R^n : sum_{i in S} c_i <= w(S) for all S}.
Subdivision regular_subdivision(const WeightVector& w);

// Basis exchange axiom, checked exhaustively.
bool is_matroid_cell(const Cell& cell);
bool is_matroidal(const Subdivision& s);

// The (A, B; mu)-split: its hyperplane meets Delta(k, n) where the
// coordinates in A sum to k - mu.
struct HypersimplexSplit {
  int k = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  int mu = 0;
};

HypersimplexSplit make_hypersimplex_split(int k, int n, std::vector<int> a, int mu);

// First cell: vertices with at least k - mu elements in A. Second cell: at
// most k - mu. Throws ParameterError when either side is empty of vertices
// strictly beyond the hyperplane.
std::pair<Cell, Cell> split_subdivision(const HypersimplexSplit& h);

// True when the two hyperplanes do not meet in the relative interior of
// Delta(k, n). Coinciding hyperplanes count as compatible.
bool splits_compatible(const HypersimplexSplit& h1, const HypersimplexSplit& h2);

// Cells of the common refinement of pairwise compatible splits. Throws
// CompatibilityError if some pair is incompatible.
Subdivision common_refinement(int k, int n,
                              const std::vector<HypersimplexSplit>& splits);

// The split of Delta(2, m) attached to an internal edge of a tree.
HypersimplexSplit split_of_tree_edge(const Split& s, int m);

// One cell of Delta(2, m) per internal vertex v of a tree with leaves
// 1..m: all pairs ij whose connecting path passes through v.
Subdivision cells_from_tree(const MetricTree& tree);

// Restriction to the facet x_i = 1 (Delta(k-1, n-1)) or x_i = 0
// (Delta(k, n-1)); labels above i shift down by one.
WeightVector contraction_restriction(const WeightVector& w, int i);
WeightVector deletion_restriction(const WeightVector& w, int i);

// Bases of a cell containing i, with i removed and labels above i shifted
// down. The result may be empty or lower dimensional.
Cell contract_cell(const Cell& cell, int i);

// Inclusion-maximal full-dimensional members of a family of vertex sets.
std::vector<Cell> maximal_full_cells(std::vector<Cell> cells);

}  // namespace dressian

#endif  // DRESSIAN_SUBDIVISION_HPP_
