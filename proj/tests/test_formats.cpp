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

#include <string>
#include <vector>

#include "dressian/errors.hpp"
#include "dressian/fixtures.hpp"
#include "dressian/formats.hpp"

using namespace dressian;
using formats::Json;

TEST_CASE("orderings") {
  // Colex listing of 2-subsets of [4]: 12 13 23 14 24 34.
  CHECK(formats::ordering_permutation(2, 4, formats::Ordering::kColex) ==
        std::vector<std::size_t>{0, 1, 3, 2, 4, 5});
  CHECK(formats::ordering_permutation(2, 4, formats::Ordering::kRevlex) ==
        std::vector<std::size_t>{5, 4, 3, 2, 1, 0});
  CHECK(formats::parse_ordering("colex") == formats::Ordering::kColex);
  CHECK_THROWS_AS(formats::parse_ordering("grevlex"), ParseError);
}

TEST_CASE("weights in every ordering round trip") {
  const WeightVector w = fixtures::delta48_weight();
  for (auto o : {formats::Ordering::kLex, formats::Ordering::kColex,
                 formats::Ordering::kRevlex}) {
    const Json j = formats::weight_to_json(w, o);
    CHECK(j["ordering"] == formats::ordering_name(o));
    CHECK(formats::weight_from_json(formats::parse_document(j.dump())) == w);
  }
}

TEST_CASE("colex values are placed by subset") {
  const Json j = Json::parse(R"({"k":2,"n":4,"ordering":"colex","values":[0,1,2,3,4,5]})");
  const WeightVector w = formats::weight_from_json(j);
  CHECK(w.at(std::vector<int>{2, 3}) == 2);
  CHECK(w.at(std::vector<int>{1, 4}) == 3);
}

TEST_CASE("numbers must be exact") {
  CHECK(formats::rational_from_json(Json("-3/9")) == Rational(-1, 3));
  CHECK(formats::rational_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(formats::rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(formats::rational_from_json(Json(true)), ParseError);
  const auto bad = Json::parse(R"({"k":2,"n":4,"values":[0,1,2,3,4,5.0]})");
  CHECK_THROWS_AS(formats::weight_from_json(bad), ParseError);
  const auto short_values = Json::parse(R"({"k":2,"n":4,"values":[0,1,2]})");
  CHECK_THROWS_AS(formats::weight_from_json(short_values), Error);
  CHECK_THROWS_AS(formats::weight_from_json(Json::parse(R"({"n":4,"values":[]})")), ParseError);
  CHECK_THROWS_AS(formats::parse_document("{ not json"), ParseError);
}

TEST_CASE("subdivision documents round trip") {
  const auto s = regular_subdivision(fixtures::dr25_weight());
  const Json j = formats::subdivision_to_json(s, true);
  CHECK(j["all_matroidal"] == true);
  CHECK(j["matroidal"].size() == 3);
  CHECK(formats::subdivision_from_json(j).same_cells(s));
}

TEST_CASE("arrangement documents round trip") {
  const auto t = *metrize_abstract_arrangement(fixtures::cone_class_arrangement(2));
  const auto back = formats::arrangement_from_json(
      formats::parse_document(formats::arrangement_to_json(t).dump()));
  REQUIRE(back.trees.size() == t.trees.size());
  for (std::size_t i = 0; i < t.trees.size(); ++i) {
    CHECK(labelled_isomorphic(back.trees[i], t.trees[i], true));
  }
  const Json topo = formats::arrangement_to_json(t, false);
  CHECK(topo["trees"][0]["tree"].get<std::string>().find(':') == std::string::npos);
}

TEST_CASE("fan documents") {
  const auto j = Json::parse(R"({
    "n": 4, "k": 2,
    "rays": [[1,0,0,0,0,1],[0,1,0,0,1,0],[0,0,1,1,0,0]],
    "lineality": [[1,1,1,0,0,0],[1,0,0,1,1,0],[0,1,0,1,0,1],[0,0,1,0,1,1]],
    "cones": [[0],[1],[2]]})");
  const auto fan = formats::fan_from_json(j);
  CHECK(fan.cones.size() == 3);
  const WeightVector p = formats::fan_cone_point(fan, 0);
  CHECK(p.values() == RationalVector{3, 2, 2, 2, 2, 3});
  CHECK(is_in_dressian(p).member);
  auto broken = j;
  broken["rays"][0] = Json::array({1, 2});
  CHECK_THROWS_AS(formats::fan_from_json(broken), ParseError);
}

TEST_CASE("every fixture document parses") {
  for (const auto& name : formats::fixture_names()) {
    const Json doc = formats::fixture_document(name);
    if (doc.contains("values")) {
      CHECK_NOTHROW(formats::weight_from_json(doc));
    } else {
      CHECK_NOTHROW(formats::arrangement_from_json(doc));
    }
  }
  CHECK_THROWS_AS(formats::fixture_document("nope"), ParameterError);
}
