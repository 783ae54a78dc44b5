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


#include "dressian/formats.hpp"

#include <algorithm>
#include <numeric>

#include "dressian/errors.hpp"
#include "dressian/fixtures.hpp"

namespace dressian::formats {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

RationalVector rational_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

void check_shape(int k, int n) {
  if (n < 1 || n > 30 || k < 0 || k > n) {
    throw ParseError("unsupported shape k=" + std::to_string(k) + ", n=" + std::to_string(n));
  }
}

}  // namespace

Ordering parse_ordering(const std::string& name) {
  if (name == "lex") return Ordering::kLex;
  if (name == "colex") return Ordering::kColex;
  if (name == "revlex") return Ordering::kRevlex;
  throw ParseError("unknown ordering \"" + name + "\" (expected lex, colex or revlex)");
}

std::string ordering_name(Ordering o) {
  switch (o) {
    case Ordering::kLex:
      return "lex";
    case Ordering::kColex:
      return "colex";
    case Ordering::kRevlex:
      return "revlex";
  }
  return "lex";
}

std::vector<std::size_t> ordering_permutation(int k, int n, Ordering o) {
  const auto subsets = enumerate_ksubsets(k, n);
  std::vector<std::size_t> perm(subsets.size());
  std::iota(perm.begin(), perm.end(), 0);
  if (o == Ordering::kRevlex) {
    std::reverse(perm.begin(), perm.end());
  } else if (o == Ordering::kColex) {
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = subsets[x].elements();
      const auto& b = subsets[y].elements();
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
  }
  return perm;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) {
    throw ParseError("floating point value " + j.dump() + " is not allowed; use \"p/q\"");
  }
  throw ParseError("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

WeightVector weight_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  check_shape(k, n);
  Ordering o = Ordering::kLex;
  if (j.contains("ordering")) {
    if (!j["ordering"].is_string()) throw ParseError("\"ordering\" must be a string");
    o = parse_ordering(j["ordering"].get<std::string>());
  }
  const RationalVector listed = rational_list(field(j, "values"), "\"values\"");
  if (listed.size() != binomial(n, k)) {
    throw ParseError("\"values\" needs " + std::to_string(binomial(n, k)) + " entries, got " +
                     std::to_string(listed.size()));
  }
  const auto perm = ordering_permutation(k, n, o);
  RationalVector lex(listed.size());
  for (std::size_t p = 0; p < perm.size(); ++p) lex[perm[p]] = listed[p];
  return WeightVector(k, n, std::move(lex));
}

Json weight_to_json(const WeightVector& w, Ordering o) {
  Json values = Json::array();
  for (std::size_t r : ordering_permutation(w.k(), w.n(), o)) {
    values.push_back(rational_to_json(w[r]));
  }
  return Json{{"k", w.k()}, {"n", w.n()}, {"ordering", ordering_name(o)}, {"values", values}};
}

Json subdivision_to_json(const Subdivision& s, bool certify) {
  Json cells = Json::array();
  Json flags = Json::array();
  for (const auto& c : s.cells) {
    Json cell = Json::array();
    for (const auto& b : c.bases) cell.push_back(b.elements());
    cells.push_back(cell);
    if (certify) flags.push_back(is_matroid_cell(c));
  }
  Json out{{"k", s.k}, {"n", s.n}, {"cells", cells}};
  if (certify) {
    out["matroidal"] = flags;
    out["all_matroidal"] = is_matroidal(s);
  }
  return out;
}

Subdivision subdivision_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  check_shape(k, n);
  Subdivision out{k, n, {}, std::nullopt};
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  for (const auto& c : cells) {
    if (!c.is_array()) throw ParseError("each cell must be an array of subsets");
    std::vector<std::vector<int>> bases;
    for (const auto& b : c) bases.push_back(int_list(b, "cell basis"));
    try {
      out.cells.push_back(make_cell(k, n, bases));
    } catch (const ParameterError& e) {
      throw ParseError(e.what());
    }
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

TreeArrangement arrangement_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  check_shape(k, n);
  const Json& trees = field(j, "trees");
  if (!trees.is_array()) throw ParseError("\"trees\" must be an array");
  std::vector<std::pair<std::vector<int>, MetricTree>> entries;
  for (const auto& t : trees) {
    auto index = int_list(field(t, "index"), "\"index\"");
    const Json& newick = field(t, "tree");
    if (!newick.is_string()) throw ParseError("\"tree\" must be a Newick string");
    entries.emplace_back(std::move(index), parse_newick(newick.get<std::string>()).tree);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::vector<int>> expected;
  for (const auto& s : enumerate_ksubsets(k - 2 < 0 ? 0 : k - 2, n)) expected.push_back(s.elements());
  if (entries.size() != expected.size()) {
    throw ParseError("arrangement needs " + std::to_string(expected.size()) + " trees, got " +
                     std::to_string(entries.size()));
  }
  std::vector<MetricTree> ordered;
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (entries[p].first != expected[p]) {
      throw ParseError("arrangement indices must be every (k-2)-subset of [n] exactly once");
    }
    ordered.push_back(std::move(entries[p].second));
  }
  try {
    return make_arrangement(k, n, std::move(ordered));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

Json arrangement_to_json(const TreeArrangement& t, bool with_lengths) {
  Json trees = Json::array();
  for (std::size_t p = 0; p < t.trees.size(); ++p) {
    trees.push_back(Json{{"index", t.indices[p]}, {"tree", to_newick(t.trees[p], with_lengths)}});
  }
  return Json{{"k", t.k}, {"n", t.n}, {"trees", trees}};
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.n = int_field(j, "n");
  fan.k = int_field(j, "k");
  check_shape(fan.k, fan.n);
  const std::size_t len = binomial(fan.n, fan.k);
  auto vectors = [&](const char* name, std::vector<RationalVector>& out) {
    const Json& list = field(j, name);
    if (!list.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
    for (const auto& v : list) {
      if (!v.is_array()) throw ParseError(std::string("\"") + name + "\" entries must be arrays");
      RationalVector row;
      for (const auto& x : v) {
        if (!x.is_number_integer()) {
          throw ParseError(std::string("\"") + name + "\" entries must be integer vectors");
        }
        row.emplace_back(std::to_string(x.get<long long>()));
      }
      if (row.size() != len) {
        throw ParseError(std::string("\"") + name + "\" vectors need length " + std::to_string(len));
      }
      out.push_back(std::move(row));
    }
  };
  vectors("rays", fan.rays);
  vectors("lineality", fan.lineality);
  const Json& cones = field(j, "cones");
  if (!cones.is_array()) throw ParseError("\"cones\" must be an array");
  for (const auto& c : cones) {
    std::vector<std::size_t> cone;
    for (int idx : int_list(c, "cone")) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= fan.rays.size()) {
        throw ParseError("ray index " + std::to_string(idx) + " out of range");
      }
      cone.push_back(static_cast<std::size_t>(idx));
    }
    if (cone.empty()) throw ParseError("a cone needs at least one ray");
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

WeightVector fan_cone_point(const Fan& fan, std::size_t cone) {
  if (cone >= fan.cones.size()) throw ParameterError("cone index out of range");
  WeightVector w(fan.k, fan.n);
  for (std::size_t r : fan.cones[cone]) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += fan.rays[r][i];
  }
  for (const auto& l : fan.lineality) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += l[i];
  }
  return w;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names = {"delta48-weight", "delta48-contraction", "dr25-weight",
                                    "dr25-tree"};
  for (int c = 0; c < 7; ++c) names.push_back("cone-class-" + std::to_string(c));
  return names;
}

Json fixture_document(const std::string& name) {
  if (name == "delta48-weight") return weight_to_json(fixtures::delta48_weight());
  if (name == "delta48-contraction") return weight_to_json(fixtures::delta48_contraction());
  if (name == "dr25-weight") return weight_to_json(fixtures::dr25_weight());
  if (name == "dr25-tree") {
    const auto t = make_arrangement(2, 5, {fixtures::dr25_tree()});
    return arrangement_to_json(t, false);
  }
  const std::string prefix = "cone-class-";
  if (name.rfind(prefix, 0) == 0 && name.size() == prefix.size() + 1) {
    const int id = name.back() - '0';
    if (id >= 0 && id <= 6) {
      return arrangement_to_json(fixtures::cone_class_arrangement(id), false);
    }
  }
  throw ParameterError("unknown fixture \"" + name + "\"");
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace dressian::formats
