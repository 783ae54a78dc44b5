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


#ifndef DRESSIAN_FORMATS_HPP_
#define DRESSIAN_FORMATS_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "dressian/arrangement.hpp"
#include "dressian/combinatorics.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

// JSON documents exchanged by the command-line tool. Every number is either
// a JSON integer or a string "p" / "p/q"; floating point literals are
// rejected with ParseError. Field names are documented in docs/formats.md.
namespace dressian::formats {

using Json = nlohmann::json;

enum class Ordering { kLex, kColex, kRevlex };

Ordering parse_ordering(const std::string& name);
std::string ordering_name(Ordering o);

// Lex positions of the subsets listed in the given ordering.
std::vector<std::size_t> ordering_permutation(int k, int n, Ordering o);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

// {"k", "n", "ordering", "values"}; values are stored internally in lex order.
WeightVector weight_from_json(const Json& j);
Json weight_to_json(const WeightVector& w, Ordering o = Ordering::kLex);

// {"k", "n", "cells": [[[1,2], ...], ...]} plus "matroidal": [bool...] when
// certified.
Json subdivision_to_json(const Subdivision& s, bool certify);
Subdivision subdivision_from_json(const Json& j);

// {"k", "n", "trees": [{"index": [..], "tree": "<newick>"}]}. Trees
// without branch lengths read as unit lengths.
TreeArrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const TreeArrangement& t, bool with_lengths = true);

// External fan data: integer rays and lineality generators of length
// C(n, k), cones as lists of ray indices.
struct Fan {
  int n = 0;
  int k = 0;
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
  std::vector<std::vector<std::size_t>> cones;
};

Fan fan_from_json(const Json& j);

// Sum of the cone's rays plus the sum of the lineality generators.
WeightVector fan_cone_point(const Fan& fan, std::size_t cone);

std::vector<std::string> fixture_names();
Json fixture_document(const std::string& name);

Json parse_document(const std::string& text);

}  // namespace dressian::formats

#endif  // DRESSIAN_FORMATS_HPP_
