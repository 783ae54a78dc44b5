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


#include "dressian/fixtures.hpp"

#include "dressian/errors.hpp"

namespace dressian::fixtures {

const std::vector<ConeClass>& dr36_cone_classes() {
  static const std::vector<ConeClass> classes = {
      {0,
       {"25,4,36", "15,3,46", "16,2,45", "26,1,35", "12,6,34", "13,5,24"},
       {"125", "136", "246", "345"}},
      {1,
       {"25,6,34", "15,3,46", "26,1,45", "26,1,35", "12,6,34", "15,3,24"},
       {"246", "345", "125"}},
      {2,
       {"25,6,34", "15,3,46", "15,4,26", "15,3,26", "12,6,34", "15,3,24"},
       {"125", "246"}},
      {3,
       {"25,3,46", "15,3,46", "15,2,46", "15,3,26", "12,3,46", "15,3,24"},
       {"125", "246"}},
      {4,
       {"35,2,46", "15,3,46", "15,2,46", "15,3,26", "13,2,46", "15,3,24"},
       {"135", "246"}},
      {5,
       {"23,5,46", "15,3,46", "15,2,46", "15,3,26", "23,1,46", "15,3,24"},
       {"246"}},
      {6,
       {"23,5,46", "15,3,46", "15,2,46", "15,6,23", "23,1,46", "15,4,23"},
       {}},
  };
  return classes;
}

MetricTree parse_caterpillar(const std::string& text) {
  if (text.size() != 7 || text[2] != ',' || text[4] != ',') {
    throw ParseError("caterpillar must look like \"ab,c,de\": " + text);
  }
  auto digit = [&](std::size_t pos) {
    if (text[pos] < '1' || text[pos] > '9') throw ParseError("bad caterpillar label in " + text);
    return text[pos] - '0';
  };
  return caterpillar({digit(0), digit(1)}, {digit(3)}, {digit(5), digit(6)});
}

AbstractArrangement cone_class_arrangement(int id) {
  const auto& classes = dr36_cone_classes();
  if (id < 0 || id >= static_cast<int>(classes.size())) {
    throw ParameterError("cone class index must be in 0..6");
  }
  std::vector<MetricTree> trees;
  for (const auto& c : classes[id].caterpillars) trees.push_back(parse_caterpillar(c));
  return make_arrangement(3, 6, std::move(trees));
}

const std::vector<std::vector<std::string>>& adjacent_cone_cherries() {
  static const std::vector<std::vector<std::string>> column = {
      {"123", "256"}, {"123", "156"}, {"123", "346"}, {"123", "345"},
      {"123", "456"}, {"123", "356"}, {},             {"124"},
  };
  return column;
}

MetricTree dr25_tree() { return caterpillar({1, 2}, {3}, {4, 5}); }

std::vector<HypersimplexSplit> dr25_splits() {
  return {make_hypersimplex_split(2, 5, {1, 2}, 1),
          make_hypersimplex_split(2, 5, {1, 2, 3}, 1)};
}

std::vector<Cell> dr25_cells() {
  return {
      make_cell(2, 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
      make_cell(2, 5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
      make_cell(2, 5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}),
  };
}

WeightVector dr25_weight() {
  WeightVector w(2, 5);
  w.set(KSubset({1, 2}, 5), 1);
  w.set(KSubset({4, 5}, 5), 1);
  return w;
}

WeightVector delta48_weight() {
  static const int values[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 0, 0,
                               0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 0,
                               0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4,
                               5, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7};
  RationalVector v;
  for (int x : values) v.emplace_back(x);
  return WeightVector(4, 8, std::move(v));
}

WeightVector delta48_contraction() {
  static const int values[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 0, 0,
                               0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5};
  RationalVector v;
  for (int x : values) v.emplace_back(x);
  return WeightVector(3, 7, std::move(v));
}

const std::vector<std::vector<int>>& delta48_printed_cells() {
  static const std::vector<std::vector<int>> cells = [] {
    auto range = [](std::vector<int>& out, int lo, int hi) {
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    };
    std::vector<std::vector<int>> c(5);
    range(c[0], 0, 8), range(c[0], 15, 18), range(c[0], 35, 38);
    range(c[1], 1, 11), range(c[1], 15, 21), range(c[1], 35, 41);
    range(c[2], 5, 11), range(c[2], 15, 21), range(c[2], 25, 27);
    range(c[2], 35, 41), range(c[2], 45, 47);
    range(c[3], 6, 14), range(c[3], 16, 34), range(c[3], 36, 69);
    range(c[4], 15, 18), range(c[4], 25, 27), range(c[4], 35, 38);
    range(c[4], 45, 47), range(c[4], 55, 57);
    return c;
  }();
  return cells;
}

std::vector<std::size_t> delta48_printed_sizes() { return {17, 25, 27, 62, 17}; }

Cell cell_from_positions(int k, int n, const std::vector<int>& positions) {
  std::vector<KSubset> bases;
  for (int p : positions) {
    if (p < 0 || static_cast<std::uint64_t>(p) >= binomial(n, k)) {
      throw ParameterError("cell position out of range");
    }
    bases.emplace_back(subset_unrank(static_cast<std::size_t>(p), k, n), n);
  }
  return make_cell(k, n, std::move(bases));
}

}  // namespace dressian::fixtures
