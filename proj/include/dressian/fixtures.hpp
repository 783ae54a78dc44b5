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


#ifndef DRESSIAN_FIXTURES_HPP_
#define DRESSIAN_FIXTURES_HPP_

#include <string>
#include <vector>

#include "dressian/arrangement.hpp"
#include "dressian/combinatorics.hpp"
#include "dressian/metric_tree.hpp"
#include "dressian/subdivision.hpp"

// Reference data bundled with the library: the seven Dr(3,6) cone classes
// with their cherry lists, the cherry column of the cones adjacent to a
// representative of the fifth class, the Dr(2,5) caterpillar example, and
// the Delta(4,8) weight with its printed cells.
namespace dressian::fixtures {

struct ConeClass {
  int id;
  // Caterpillars of T_1..T_6, written "ab,c,de" for C(ab, c, de).
  std::vector<std::string> caterpillars;
  // Published cherries, each a 3-subset written as digits.
  std::vector<std::string> cherries;
};

const std::vector<ConeClass>& dr36_cone_classes();

// Parses "ab,c,de" (single-digit labels) into a unit-length caterpillar.
MetricTree parse_caterpillar(const std::string& text);

// Topology-only arrangement of class `id` (0..6), unit edge lengths.
AbstractArrangement cone_class_arrangement(int id);

// Cherry sets of the eight cones adjacent to the reference cone, in the
// published labelling.
const std::vector<std::vector<std::string>>& adjacent_cone_cherries();

// Tree with splits 12|345 and 123|45, its splits, and the three cells.
MetricTree dr25_tree();
std::vector<HypersimplexSplit> dr25_splits();
std::vector<Cell> dr25_cells();
WeightVector dr25_weight();  // w(12) = w(45) = 1, other entries 0

// The Delta(4,8) weight in lex order, the contraction at label 1, the
// printed cells as 0-based lex positions, and their published sizes.
WeightVector delta48_weight();
WeightVector delta48_contraction();
const std::vector<std::vector<int>>& delta48_printed_cells();
std::vector<std::size_t> delta48_printed_sizes();
Cell cell_from_positions(int k, int n, const std::vector<int>& positions);

}  // namespace dressian::fixtures

#endif  // DRESSIAN_FIXTURES_HPP_
